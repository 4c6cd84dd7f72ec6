#include "sparsehg/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "sparsehg/detail/violation_search.hpp"

namespace sparsehg {

namespace {

constexpr long long kMaxSolverCandidates = 2'000'000;
constexpr long long kMaxPackCandidates = 10'000'000;

std::vector<std::vector<int>> all_r_subsets(int n, int r, long long cap, const char* who) {
  long long count = binomial(n, r);
  if (count > cap)
    throw Error(std::string(who) + ": C(" + std::to_string(n) + "," + std::to_string(r) +
                ") = " + std::to_string(count) + " candidate edges exceed the supported " +
                std::to_string(cap));
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n < r) return out;
  std::vector<int> sel(r);
  for (int i = 0; i < r; ++i) sel[i] = i;
  while (true) {
    out.push_back(sel);
    int i = r - 1;
    while (i >= 0 && sel[i] == n - r + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

// Branch and bound over candidate edges in lexicographic order.
class ExactSolver {
 public:
  ExactSolver(int n, int r, const ConstraintFamily& fam, std::uint64_t budget,
              const ProgressFn& progress)
      : n_(n), r_(r), fam_(fam), store_(n, r), progress_(progress) {
    if (n < 0 || r < 1) throw Error("exact_max: bad n or r");
    if (fam.constraints.empty()) throw Error("exact_max: empty constraint family");
    for (const auto& c : fam.constraints) validate_constraint(r, c);
    budget_.limit = budget;
    cands_ = all_r_subsets(n, r, kMaxSolverCandidates, "exact_max");

    if (fam.codegree_rule) {
      const auto& rule = *fam.codegree_rule;
      if (rule.k < 1 || rule.k >= r) throw Error("exact_max: codegree rule needs 1 <= k < r");
      if (rule.e < 1) throw Error("exact_max: codegree rule needs e >= 1");
      rule_e_ = rule.e;
      int s = rule.k - 1;
      // rank every (k-1)-subset of [0,n); candidates hold rank lists
      std::map<std::vector<int>, int> rank;
      auto subs = all_r_subsets(n, s, kMaxSolverCandidates, "exact_max");
      for (const auto& sub : subs) rank.emplace(sub, static_cast<int>(rank.size()));
      chosen_deg_.assign(rank.size(), 0);
      undecided_.assign(rank.size(), 0);
      cand_subs_.resize(cands_.size());
      std::vector<int> sel(s), key(s);
      for (std::size_t c = 0; c < cands_.size(); ++c) {
        const auto& edge = cands_[c];
        for (int i = 0; i < s; ++i) sel[i] = i;
        while (true) {
          for (int i = 0; i < s; ++i) key[i] = edge[sel[i]];
          int rk = rank.at(key);
          cand_subs_[c].push_back(rk);
          ++undecided_[rk];
          int i = s - 1;
          while (i >= 0 && sel[i] == r_ - s + i) --i;
          if (i < 0) break;
          ++sel[i];
          for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
        }
      }
      has_rule_ = true;
    }
  }

  SearchResult run() {
    dfs(0);
    SearchResult out;
    out.optimum = best_;
    out.witness = Hypergraph::build(n_, r_, best_edges_);
    out.nodes = budget_.used;
    out.status = budget_.exceeded ? SolveStatus::kBudgetExhausted
                                  : SolveStatus::kProvenOptimal;
    out.certificates = {"incumbent-plus-remaining bound",
                        "first-included-edge relabeling"};
    if (has_rule_) out.certificates.push_back("codegree completion pruning");
    return out;
  }

 private:
  void record_incumbent() {
    best_ = store_.edge_count();
    best_edges_.clear();
    for (int id = 0; id < store_.edge_count(); ++id)
      best_edges_.push_back(store_.edge(id));
  }

  bool include_is_free(int new_id) {
    for (const auto& c : fam_.constraints) {
      detail::ViolationDfs<detail::EdgeStore> dfs(store_, c.v, c.e, budget_);
      if (dfs.exists_through(new_id, /*connected_only=*/false)) return false;
      if (budget_.exceeded) return false;
    }
    return true;
  }

  // applies rule bookkeeping for deciding candidate c; true when a subset
  // with positive degree can no longer reach degree e
  bool apply_decision(std::size_t c, bool include) {
    if (!has_rule_) return false;
    bool dead = false;
    for (int rk : cand_subs_[c]) {
      --undecided_[rk];
      if (include) ++chosen_deg_[rk];
      if (chosen_deg_[rk] >= 1 && chosen_deg_[rk] + undecided_[rk] < rule_e_) dead = true;
    }
    return dead;
  }

  void undo_decision(std::size_t c, bool include) {
    if (!has_rule_) return;
    for (int rk : cand_subs_[c]) {
      ++undecided_[rk];
      if (include) --chosen_deg_[rk];
    }
  }

  void dfs(std::size_t idx) {
    if (!budget_.charge()) return;
    if (progress_ && (budget_.used & ((1u << 20) - 1)) == 0)
      progress_(budget_.used, best_);
    long long chosen = store_.edge_count();
    if (idx == cands_.size()) {
      // every candidate decided; the rule holds by the dead-branch pruning
      if (chosen > best_) record_incumbent();
      return;
    }
    if (!has_rule_ && chosen > best_) record_incumbent();
    if (chosen + static_cast<long long>(cands_.size() - idx) <= best_) return;

    // include, unless symmetry pins the first edge to candidate 0
    if (!(chosen == 0 && idx > 0)) {
      int new_id = store_.add_edge(cands_[idx]);
      if (include_is_free(new_id)) {
        bool dead = apply_decision(idx, true);
        if (!dead) dfs(idx + 1);
        undo_decision(idx, true);
      }
      store_.pop_edge();
      if (budget_.exceeded) return;
    }

    bool dead = apply_decision(idx, false);
    if (!dead) dfs(idx + 1);
    undo_decision(idx, false);
  }

  int n_, r_;
  ConstraintFamily fam_;
  detail::EdgeStore store_;
  ProgressFn progress_;
  detail::SearchBudget budget_;
  std::vector<std::vector<int>> cands_;

  bool has_rule_ = false;
  int rule_e_ = 0;
  std::vector<std::vector<int>> cand_subs_;
  std::vector<int> chosen_deg_;
  std::vector<int> undecided_;

  long long best_ = 0;
  std::vector<std::vector<int>> best_edges_;
};

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kProvenOptimal: return "proven-optimal";
    case SolveStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult exact_max(int n, int r, const ConstraintFamily& fam, std::uint64_t budget,
                       const ProgressFn& progress) {
  return ExactSolver(n, r, fam, budget, progress).run();
}

ChainReport chain_check(int n, int r, int e, int k, std::uint64_t budget) {
  if (e < 3) throw Error("chain_check: e must be at least 3");
  if (k < 1 || k >= r) throw Error("chain_check: need 1 <= k < r");
  ChainReport rep;
  rep.n = n;
  rep.r = r;
  rep.e = e;
  rep.k = k;

  ConstraintFamily plain;
  plain.constraints.push_back({e * r - (e - 1) * k, e});
  rep.entries.push_back({0, exact_max(n, r, plain, budget)});
  for (int t = e - 1; t >= 2; --t)
    rep.entries.push_back({t, exact_max(n, r, property_family(r, k, e, t), budget)});

  rep.all_proven = true;
  for (const auto& en : rep.entries)
    if (en.result.status != SolveStatus::kProvenOptimal) rep.all_proven = false;

  rep.chain_ok = true;
  for (std::size_t i = 1; i < rep.entries.size(); ++i)
    if (rep.entries[i - 1].result.optimum < rep.entries[i].result.optimum)
      rep.chain_ok = false;

  rep.peel_bound_lhs = rep.entries[0].result.optimum -
                  (static_cast<long long>(e) - 1) * binomial(n, k - 1);
  rep.peel_bound_ok = rep.peel_bound_lhs <= rep.entries[1].result.optimum;
  return rep;
}

PackingResult greedy_pack(int n, int r, int e, std::uint64_t seed, PackOrder order,
                          std::uint64_t verify_budget, const ProgressFn& progress) {
  if (r < 2) throw Error("greedy_pack: uniformity must be at least 2");
  if (n < r) throw Error("greedy_pack: need n >= r");
  if (e < 2) throw Error("greedy_pack: e must be at least 2");

  PackingResult out;
  out.n = n;
  out.r = r;
  out.e = e;
  out.seed = seed;
  out.order = order;

  // candidates stored flat (stride r) to keep big instances cheap
  long long count = binomial(n, r);
  if (count > kMaxPackCandidates)
    throw Error("greedy_pack: C(" + std::to_string(n) + "," + std::to_string(r) +
                ") = " + std::to_string(count) + " candidate edges exceed the supported " +
                std::to_string(kMaxPackCandidates));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(count) * r);
  {
    std::vector<int> sel(r);
    for (int i = 0; i < r; ++i) sel[i] = i;
    while (true) {
      flat.insert(flat.end(), sel.begin(), sel.end());
      int i = r - 1;
      while (i >= 0 && sel[i] == n - r + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  auto cand_at = [&](std::size_t i) {
    return std::vector<int>(flat.begin() + static_cast<long>(i) * r,
                            flat.begin() + static_cast<long>(i + 1) * r);
  };
  std::size_t cand_count = flat.size() / r;

  std::vector<std::uint32_t> perm(cand_count);
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  if (order == PackOrder::kRandom) {
    // hand-rolled Fisher-Yates: mt19937_64 is pinned by the standard, the
    // library shuffle is not
    std::mt19937_64 gen(seed);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[gen() % i]);
  }

  std::vector<FreenessConstraint> family;
  for (int t = 2; t <= e; ++t) family.push_back({t * r - 2 * (t - 1), t});

  detail::SearchBudget unmetered{std::numeric_limits<std::uint64_t>::max()};
  detail::EdgeStore store(n, r);
  auto insertable = [&](const std::vector<int>& cand) {
    int id = store.add_edge(cand);
    bool ok = true;
    // increasing t: with the smaller constraints holding, a new bad
    // configuration is connected to the inserted edge
    for (int ti = 0; ti < static_cast<int>(family.size()); ++ti) {
      detail::ViolationDfs<detail::EdgeStore> dfs(store, family[ti].v, family[ti].e,
                                                  unmetered);
      if (dfs.exists_through(id, /*connected_only=*/true)) {
        ok = false;
        break;
      }
    }
    if (!ok) store.pop_edge();
    return ok;
  };

  std::size_t processed = 0;
  for (std::uint32_t ci : perm) {
    insertable(cand_at(ci));
    ++processed;
    if (progress && (processed & 4095) == 0) progress(processed, store.edge_count());
  }

  // a rejected candidate stays rejected (violations persist under edge
  // additions), but re-verify maximality by rescanning everything
  out.maximal = true;
  for (std::size_t i = 0; i < cand_count; ++i) {
    auto cand = cand_at(i);
    if (store.find_edge_id(cand) >= 0) continue;
    if (insertable(cand)) {
      out.maximal = false;
      store.pop_edge();
    }
  }

  std::vector<std::vector<int>> edges;
  edges.reserve(store.edge_count());
  for (int id = 0; id < store.edge_count(); ++id) edges.push_back(store.edge(id));
  out.graph = Hypergraph::build(n, r, edges);

  for (int t = 2; t <= e; ++t) {
    FreenessConstraint c = family[t - 2];
    auto res = find_violation(out.graph, c, verify_budget);
    out.checks.push_back({t, c, res.status, res.nodes});
  }

  out.target = Rational(static_cast<long long>(n) * n,
                        static_cast<long long>(r) * r - r);
  out.ratio = Rational(out.graph.edge_count()) / out.target;
  return out;
}

WitnessBound lower_bound_from_witness(const Hypergraph& f, int r, int k, int e,
                                      std::uint64_t budget) {
  if (f.uniformity() != r)
    throw Error("lower_bound_from_witness: witness uniformity " +
                std::to_string(f.uniformity()) + " != r = " + std::to_string(r));
  if (k < 1 || k >= r) throw Error("lower_bound_from_witness: need 1 <= k < r");
  if (e < 2) throw Error("lower_bound_from_witness: e must be at least 2");
  if (f.vertex_count() < 1)
    throw Error("lower_bound_from_witness: witness must have vertices");

  std::vector<FreenessConstraint> constraints;
  for (int i = 2; i <= e - 1; ++i) constraints.push_back({i * r - (i - 1) * k - 1, i});
  constraints.push_back({e * r - (e - 1) * k, e});

  WitnessBound out;
  for (const auto& c : constraints) {
    std::uint64_t remaining = out.nodes >= budget ? 1 : budget - out.nodes;
    auto res = find_violation(f, c, remaining);
    out.nodes += res.nodes;
    if (res.status == SearchStatus::kViolation) {
      out.status = BoundStatus::kRejected;
      out.failed_constraint = c;
      out.rejection_witness = res.witness;
      return out;
    }
    if (res.status == SearchStatus::kBudgetExhausted) {
      out.status = BoundStatus::kBudgetExhausted;
      return out;
    }
  }
  out.status = BoundStatus::kCertified;
  out.bound = Rational(f.edge_count(), checked_pow(f.vertex_count(), k));
  return out;
}

ExponentBounds exponent_bounds(long long n, int r, int v, int e) {
  if (e < 2) throw Error("exponent_bounds: e must be at least 2");
  if (v < r) throw Error("exponent_bounds: v must be at least r");
  if (n < 0) throw Error("exponent_bounds: n must be nonnegative");
  ExponentBounds out;
  long long num = static_cast<long long>(e) * r - v;
  long long den = e - 1;
  out.lower_exponent = Rational(num, den);
  // ceiling division that is safe for negative numerators
  long long q = num / den;
  if (q * den < num) ++q;
  out.upper_exponent = q;
  out.n_to_lower = std::pow(static_cast<double>(n), out.lower_exponent.to_double());
  out.n_to_upper = std::pow(static_cast<double>(n), static_cast<double>(q));
  return out;
}

LimitRecord known_limit(int r, int k, int e) {
  if (r < 2) throw Error("known_limit: r must be at least 2");
  if (k < 1 || k >= r) throw Error("known_limit: need 1 <= k < r");
  if (e < 2) throw Error("known_limit: e must be at least 2");

  LimitRecord rec;
  rec.r = r;
  rec.k = k;
  rec.e = e;
  long long rr = r;

  if (k == 1) {
    rec.value = Rational(e - 1, static_cast<long long>(e - 1) * (r - 1) + 1);
    rec.source = "k=1 limit";
    rec.flags.push_back(
        "the displayed limit carries a stray factor n; the constant is returned");
    return rec;
  }
  if (e == 3) {
    rec.value = Rational(2, factorial(k) * (2 * binomial(rr, k) - 1));
    if (r == 3 && k == 2)
      rec.source = "stated limit 1/5; e=3 closed form agrees";
    else if (k == 2)
      rec.source = "e=3 closed form (equals 1/(r^2-r-1))";
    else
      rec.source = "e=3 closed form";
    return rec;
  }
  if (e == 4) {
    if (r == 3 && k == 2) {
      rec.value = Rational(7, 36);
      rec.source = "stated limit 7/36";
      rec.flags.push_back(
          "e=4 closed form evaluates to 1/6 at (r,k)=(3,2); the stated 7/36 is kept");
    } else {
      rec.value = Rational(1, factorial(k) * binomial(rr, k));
      rec.source = "e=4 closed form";
    }
    return rec;
  }
  rec.source = "open";
  return rec;
}

SizeCheckReport size_bound_check(const Hypergraph& h, int e, std::uint64_t budget) {
  int r = h.uniformity();
  if (r < 2) throw Error("size_bound_check: uniformity must be at least 2");
  if (e < 2) throw Error("size_bound_check: e must be at least 2");
  SizeCheckReport rep;
  auto res = find_violation(h, {e * r - (e - 1), e}, budget);
  rep.nodes = res.nodes;
  rep.precondition_status = res.status;
  rep.precondition_ok = res.status == SearchStatus::kFree;
  if (res.status == SearchStatus::kViolation) rep.witness = res.witness;
  rep.edge_count = h.edge_count();
  rep.bound = Rational(h.vertex_count(), r - 1);
  rep.bound_ok = Rational(rep.edge_count) < rep.bound;
  return rep;
}

}  // namespace sparsehg
