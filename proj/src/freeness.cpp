#include "sparsehg/freeness.hpp"

#include <future>

#include "sparsehg/detail/violation_search.hpp"

namespace sparsehg {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFree: return "free";
    case SearchStatus::kViolation: return "violation";
    case SearchStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

void validate_constraint(int r, const FreenessConstraint& c) {
  if (c.e < 2)
    throw Error("freeness constraint (" + std::to_string(c.v) + "," +
                std::to_string(c.e) + "): e must be at least 2");
  if (c.v < r)
    throw Error("freeness constraint (" + std::to_string(c.v) + "," +
                std::to_string(c.e) + "): v must be at least the uniformity " +
                std::to_string(r));
}

ViolationResult find_violation(const Hypergraph& h, const FreenessConstraint& c,
                               std::uint64_t budget) {
  validate_constraint(h.uniformity(), c);
  if (budget == 0) throw Error("find_violation: budget must be positive");
  detail::SearchBudget b{budget};
  detail::ViolationDfs<Hypergraph> dfs(h, c.v, c.e, b);
  ViolationResult out;
  out.witness = dfs.find_first();
  out.nodes = b.used;
  if (out.witness)
    out.status = SearchStatus::kViolation;
  else
    out.status = b.exceeded ? SearchStatus::kBudgetExhausted : SearchStatus::kFree;
  return out;
}

EnumerationResult enumerate_violations(const Hypergraph& h, const FreenessConstraint& c,
                                       std::size_t max_count, std::uint64_t budget) {
  validate_constraint(h.uniformity(), c);
  EnumerationResult out;
  if (max_count == 0) return out;
  detail::SearchBudget b{budget};
  detail::ViolationDfs<Hypergraph> dfs(h, c.v, c.e, b);
  out.witnesses = dfs.enumerate(max_count);
  out.nodes = b.used;
  out.budget_exhausted = b.exceeded;
  return out;
}

namespace {

CodegreeVerdict check_codegree_rule(const Hypergraph& h, const CodegreeRule& rule) {
  CodegreeVerdict out;
  out.checked = true;
  if (rule.k < 1 || rule.k >= h.uniformity())
    throw Error("codegree rule: k must satisfy 1 <= k < r");
  if (rule.e < 1) throw Error("codegree rule: e must be positive");

  if (rule.k == 1) {
    // the empty subset: its codegree is the edge count
    long long m = h.edge_count();
    if (m != 0 && m < rule.e) {
      out.satisfied = false;
      out.offender = SubsetKey(std::vector<int>{});
      out.offender_degree = m;
      out.offender_count = 1;
    }
    return out;
  }

  // walk every (k-1)-subset with positive codegree, lexicographically
  if (rule.k == 2) {
    for (int v = 0; v < h.vertex_count(); ++v) {
      long long deg = static_cast<long long>(h.incident_edges(v).size());
      if (deg == 0 || deg >= rule.e) continue;
      if (!out.offender) {
        out.offender = SubsetKey({v});
        out.offender_degree = deg;
      }
      out.satisfied = false;
      ++out.offender_count;
    }
    return out;
  }

  // general sizes go through the lazy index; keys come out sorted
  SubsetKey probe;
  std::map<std::vector<int>, long long> degs;
  for (int id = 0; id < h.edge_count(); ++id) {
    const auto& e = h.edge(id);
    int s = rule.k - 1;
    std::vector<int> sel(s);
    for (int i = 0; i < s; ++i) sel[i] = i;
    while (true) {
      std::vector<int> key(s);
      for (int i = 0; i < s; ++i) key[i] = e[sel[i]];
      ++degs[key];
      int i = s - 1;
      while (i >= 0 && sel[i] == h.uniformity() - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  for (const auto& [key, deg] : degs) {
    if (deg >= rule.e) continue;
    if (!out.offender) {
      out.offender = SubsetKey(key);
      out.offender_degree = deg;
    }
    out.satisfied = false;
    ++out.offender_count;
  }
  return out;
}

}  // namespace

FamilyReport is_family_free(const Hypergraph& h, const ConstraintFamily& fam,
                            std::uint64_t budget, int threads) {
  if (fam.constraints.empty() && !fam.codegree_rule)
    throw Error("is_family_free: empty constraint family");
  FamilyReport report;
  report.constraints.resize(fam.constraints.size());

  auto run_one = [&](std::size_t i) {
    auto res = find_violation(h, fam.constraints[i], budget);
    report.constraints[i] = ConstraintVerdict{fam.constraints[i], res.status,
                                              std::move(res.witness), res.nodes};
  };

  if (threads > 1 && fam.constraints.size() > 1) {
    std::vector<std::future<void>> futs;
    for (std::size_t i = 0; i < fam.constraints.size(); ++i)
      futs.push_back(std::async(std::launch::async, run_one, i));
    for (auto& f : futs) f.get();
  } else {
    for (std::size_t i = 0; i < fam.constraints.size(); ++i) run_one(i);
  }

  if (fam.codegree_rule) report.codegree = check_codegree_rule(h, *fam.codegree_rule);
  return report;
}

ConstraintFamily property_family(int r, int k, int e, int t) {
  if (k < 1 || k >= r) throw Error("property_family: need r > k >= 1");
  if (e < 3) throw Error("property_family: need e >= 3");
  if (t < 2 || t > e - 1) throw Error("property_family: need 2 <= t <= e-1");
  ConstraintFamily fam;
  for (int i = t; i <= e - 1; ++i)
    fam.constraints.push_back({i * r - (i - 1) * k - 1, i});
  fam.constraints.push_back({e * r - (e - 1) * k, e});
  fam.codegree_rule = CodegreeRule{k, e};
  return fam;
}

}  // namespace sparsehg
