#include "sparsehg/increment.hpp"

#include <algorithm>
#include <cmath>

#include "sparsehg/extremal.hpp"

namespace sparsehg {

namespace {

// exact integer square root, or -1 when not a perfect square
long long perfect_sqrt(long long v) {
  if (v < 0) return -1;
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s * s == v ? s : -1;
}

}  // namespace

std::string to_string(IncrementStatus s) {
  switch (s) {
    case IncrementStatus::kCompleted: return "completed";
    case IncrementStatus::kAbortedWrongUnionSize: return "aborted-wrong-union-size";
    case IncrementStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

IncrementConstants increment_constants(int r) {
  if (r < 3) throw Error("increment_constants: r must be at least 3");
  long long rr = r;
  IncrementConstants c;
  c.r = r;
  c.alpha_squared = Rational(3 * rr * rr - 4 * rr - 14, 3 * rr * rr + 2 * rr - 8);
  long long sn = perfect_sqrt(c.alpha_squared.num());
  long long sd = perfect_sqrt(c.alpha_squared.den());
  if (sn >= 0 && sd > 0) c.alpha = Rational(sn, sd);
  c.alpha_value = std::sqrt(c.alpha_squared.to_double());
  c.delta = Rational(1, (3 * rr - 4) * (rr - 1) + 1);
  Rational first = Rational(1, rr * (rr - 1)) - c.delta / Rational(rr * (rr - 2));
  Rational second(1, 2 * rr * rr - 2 * rr - 5);
  c.density_threshold = std::max(first, second);
  return c;
}

StructuralReport structural_analyze(const Hypergraph& h,
                                    const std::vector<int>& config_edge_ids,
                                    int k, int t, int e,
                                    std::uint64_t solver_budget) {
  int r = h.uniformity();
  if (k < 1 || k >= r) throw Error("structural_analyze: need 1 <= k < r");
  if (t < 3) throw Error("structural_analyze: need t >= 3");
  if (t > e - 1) throw Error("structural_analyze: need t <= e-1");
  if (static_cast<int>(config_edge_ids.size()) != t - 1)
    throw Error("structural_analyze: configuration must have t-1 = " +
                std::to_string(t - 1) + " edges");

  std::vector<int> ids = config_edge_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw Error("structural_analyze: configuration edges must be distinct");

  StructuralReport rep;
  rep.x_expected = (t - 1) * r - (t - 2) * k - 1;

  Bitset xb(h.vertex_count());
  for (int id : ids) xb |= h.edge_bits(id);  // edge_bits validates the id
  int xsize = xb.count();
  if (xsize > rep.x_expected)
    throw Error("structural_analyze: union has " + std::to_string(xsize) +
                " vertices > threshold " + std::to_string(rep.x_expected) +
                "; not a bad configuration");
  rep.x_vertices = xb.to_vector();
  rep.size_ok = (xsize == rep.x_expected);

  Bitset in_cfg(h.edge_count() == 0 ? 1 : h.edge_count());
  for (int id : ids) in_cfg.set(id);
  for (int id = 0; id < h.edge_count(); ++id) {
    if (in_cfg.test(id)) continue;
    int c = h.edge_bits(id).intersection_count(xb);
    if (c == k - 1)
      rep.i_of_x.push_back(id);
    else if (c >= k)
      rep.intersection_violations.push_back(id);
  }

  long long remaining = h.vertex_count() - xsize;
  rep.i_bound_ok = static_cast<long long>(rep.i_of_x.size()) * (r - k) < remaining;

  // exact bound via the sub-instance f_{r-k+1}(n-|X|, (e-t+1)(r-k+1)-(e-t), e-t+1),
  // only when it is comfortably inside solver range
  int rp = r - k + 1;
  int ep = e - t + 1;
  int np = static_cast<int>(remaining);
  bool solvable = false;
  try {
    solvable = (np <= 16 && ep >= 2 && binomial(np, rp) <= 4000);
  } catch (const OverflowError&) {
    solvable = false;
  }
  if (solvable) {
    ConstraintFamily fam;
    fam.constraints.push_back({ep * rp - (ep - 1), ep});
    auto res = exact_max(np, rp, fam, solver_budget);
    rep.nodes = res.nodes;
    if (res.status == SolveStatus::kProvenOptimal) {
      rep.i_bound_is_exact = true;
      rep.i_bound = Rational(std::max<long long>(e - t + 1, res.optimum));
      rep.exact_bound_ok =
          Rational(static_cast<long long>(rep.i_of_x.size())) <= rep.i_bound;
    }
  }
  if (!rep.i_bound_is_exact) {
    if (r - k > 0) rep.i_bound = Rational(remaining, r - k);
  }

  // J(X) = {A \ X : A in I(X)} on the remaining vertices
  std::vector<int> new_of_old(h.vertex_count(), -1);
  int nn = 0;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!xb.test(v)) new_of_old[v] = nn++;
  std::vector<std::vector<int>> projected;
  for (int id : rep.i_of_x) {
    std::vector<int> edge;
    for (int v : h.edge(id))
      if (!xb.test(v)) edge.push_back(new_of_old[v]);
    projected.push_back(std::move(edge));
  }
  rep.j_projection = Hypergraph::build(nn, rp, projected);
  rep.j_duplicates = static_cast<int>(rep.i_of_x.size()) - rep.j_projection.edge_count();
  return rep;
}

IncrementResult density_increment(const Hypergraph& h, int t, int e, int k,
                                  std::uint64_t budget) {
  int r = h.uniformity();
  if (r < 3) throw Error("density_increment: uniformity must be at least 3");
  if (k < 1 || k >= r) throw Error("density_increment: need 1 <= k < r");
  if (t < 3) throw Error("density_increment: need t >= 3");
  if (t > e - 1) throw Error("density_increment: need t <= e-1");

  IncrementResult out;
  IncrementTrace& tr = out.trace;
  tr.n0 = h.vertex_count();
  tr.r = r;
  tr.t = t;
  tr.e = e;
  tr.k = k;
  tr.x = (t - 1) * r - (t - 2) * k - 1;
  tr.constants = increment_constants(r);
  tr.k_is_two = (k == 2);

  long long n0 = tr.n0;
  long long e0 = h.edge_count();

  auto property = is_family_free(h, property_family(r, k, e, t), budget);
  tr.nodes = 0;
  for (const auto& cv : property.constraints) tr.nodes += cv.nodes;
  tr.property_ok = property.all_free() && !property.budget_exhausted();
  tr.density_ok = n0 > 0 && Rational(e0, n0 * n0) >= tr.constants.density_threshold;

  FreenessConstraint target{tr.x, t - 1};
  Hypergraph cur = h;
  std::vector<int> cur_to_orig(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) cur_to_orig[v] = v;

  long long sum_v = 0;  // sum of v_i over completed steps
  while (true) {
    std::uint64_t remaining = tr.nodes >= budget ? 0 : budget - tr.nodes;
    if (remaining == 0) {
      tr.status = IncrementStatus::kBudgetExhausted;
      break;
    }
    auto res = find_violation(cur, target, remaining);
    tr.nodes += res.nodes;
    if (res.status == SearchStatus::kBudgetExhausted) {
      tr.status = IncrementStatus::kBudgetExhausted;
      break;
    }
    if (res.status == SearchStatus::kFree) {
      tr.status = IncrementStatus::kCompleted;
      break;
    }

    const Configuration& bad = *res.witness;
    if (static_cast<int>(bad.union_vertices.size()) != tr.x) {
      tr.status = IncrementStatus::kAbortedWrongUnionSize;
      tr.abort_config = bad;
      break;
    }

    IncrementStep step;
    step.j = static_cast<int>(tr.steps.size());
    step.x_vertices = bad.union_vertices;
    for (int v : bad.union_vertices) step.x_vertices_original.push_back(cur_to_orig[v]);
    step.config_edge_ids = bad.edge_ids;
    step.e_before = cur.edge_count();
    step.v_before = cur.vertex_count();
    if (step.v_before > 0)
      step.density_before = Rational(step.e_before, step.v_before * step.v_before);

    Bitset xb = Bitset::from(cur.vertex_count(), bad.union_vertices);
    Bitset in_cfg(cur.edge_count());
    for (int id : bad.edge_ids) in_cfg.set(id);
    for (int id = 0; id < cur.edge_count(); ++id) {
      if (in_cfg.test(id)) continue;
      int c = cur.edge_bits(id).intersection_count(xb);
      if (c == k - 1)
        step.i_edge_ids.push_back(id);
      else if (c >= k)
        step.anomalous_edge_ids.push_back(id);
      else if (c >= 1)
        step.light_edge_ids.push_back(id);
    }

    auto next = cur.delete_vertices(bad.union_vertices);
    long long removed = cur.edge_count() - next.graph.edge_count();
    long long expected = static_cast<long long>(bad.edge_ids.size()) +
                         static_cast<long long>(step.i_edge_ids.size()) +
                         static_cast<long long>(step.light_edge_ids.size()) +
                         static_cast<long long>(step.anomalous_edge_ids.size());
    if (removed != expected)
      throw Error("internal: increment step removed " + std::to_string(removed) +
                  " edges, expected " + std::to_string(expected));

    long long e_next = next.graph.edge_count();
    // e_{j+1} > e_j - v_j / (r-2), exactly
    step.step_inequality_ok = (step.e_before - e_next) * (r - 2) < step.v_before;
    // e_j > e_0 - (sum_{i<j} v_i) / (r-2), exactly
    step.cumulative_inequality_ok =
        step.j == 0 ? true : (e0 - step.e_before) * (r - 2) < sum_v;
    sum_v += step.v_before;

    std::vector<int> next_to_orig(next.graph.vertex_count());
    for (int v = 0; v < next.graph.vertex_count(); ++v)
      next_to_orig[v] = cur_to_orig[next.old_of_new[v]];
    cur_to_orig = std::move(next_to_orig);
    cur = next.graph;
    tr.steps.push_back(std::move(step));
  }

  out.result = cur;
  tr.e_final = cur.edge_count();
  tr.v_final = cur.vertex_count();

  if (tr.status == IncrementStatus::kCompleted) {
    std::uint64_t remaining = tr.nodes >= budget ? 1 : budget - tr.nodes;
    auto verify = find_violation(cur, target, remaining);
    tr.nodes += verify.nodes;
    tr.freeness_ok = verify.status == SearchStatus::kFree;
  }

  // conclusions (ii) and (iii) plus the step-count bound, evaluated exactly:
  // alpha*n <= v  <=>  alpha^2 n^2 <= v^2
  __int128 an = static_cast<__int128>(tr.constants.alpha_squared.num()) * n0 * n0;
  __int128 vd = static_cast<__int128>(tr.constants.alpha_squared.den()) *
                tr.v_final * tr.v_final;
  tr.vertex_bound_ok = an <= vd;
  tr.y_bound_ok = an < vd;
  if (tr.v_final > 0) {
    __int128 lhs = static_cast<__int128>(tr.e_final) * n0 * n0;
    __int128 rhs = static_cast<__int128>(e0) * tr.v_final * tr.v_final;
    tr.density_conclusion_ok = lhs >= rhs;
  } else {
    tr.density_conclusion_ok = (e0 == 0);
  }
  return out;
}

CodegreeUpperReport codegree_upper_check(const Hypergraph& h, int k, int e,
                                         std::uint64_t budget) {
  int r = h.uniformity();
  if (k < 1 || k >= r) throw Error("codegree_upper_check: need 1 <= k < r");
  if (e < 2) throw Error("codegree_upper_check: e must be at least 2");

  CodegreeUpperReport rep;
  FreenessConstraint pre{e * r - (e - 1) * k, e};
  auto res = find_violation(h, pre, budget);
  rep.nodes = res.nodes;
  rep.precondition_status = res.status;
  rep.precondition_ok = res.status == SearchStatus::kFree;
  if (res.status == SearchStatus::kViolation) {
    rep.witness = res.witness;
    return rep;
  }
  if (res.status == SearchStatus::kBudgetExhausted) {
    rep.budget_exhausted = true;
    return rep;
  }

  long long n = h.vertex_count();
  rep.degree_bound = Rational(n, r - k);

  // positive (k-1)-subsets, lexicographically; k == 1 means the empty subset
  std::vector<SubsetKey> subsets;
  if (k == 1) {
    subsets.emplace_back(std::vector<int>{});
    rep.max_codegree = h.edge_count();
    rep.max_subset = subsets.front();
  } else {
    std::map<std::vector<int>, long long> degs;
    for (int id = 0; id < h.edge_count(); ++id) {
      const auto& edge = h.edge(id);
      int s = k - 1;
      std::vector<int> sel(s), key(s);
      for (int i = 0; i < s; ++i) sel[i] = i;
      while (true) {
        for (int i = 0; i < s; ++i) key[i] = edge[sel[i]];
        ++degs[key];
        int i = s - 1;
        while (i >= 0 && sel[i] == r - s + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
    for (const auto& [key, deg] : degs) {
      subsets.emplace_back(key);
      if (deg > rep.max_codegree) {
        rep.max_codegree = deg;
        rep.max_subset = subsets.back();
      }
    }
  }
  rep.degree_bound_ok = rep.max_codegree * (r - k) < n;

  // link check: each positive link must be
  // (e(r-k+1)-(e-1), e)-free as an (r-k+1)-graph.
  int rp = r - k + 1;
  FreenessConstraint link_c{e * rp - (e - 1), e};
  for (const auto& key : subsets) {
    std::uint64_t remaining = rep.nodes >= budget ? 0 : budget - rep.nodes;
    if (remaining == 0) {
      rep.budget_exhausted = true;
      break;
    }
    Hypergraph link_graph = k == 1 ? h : h.link(key).graph;
    auto lr = find_violation(link_graph, link_c, remaining);
    rep.nodes += lr.nodes;
    ++rep.links_checked;
    if (lr.status == SearchStatus::kViolation) rep.link_failures.push_back(key);
    if (lr.status == SearchStatus::kBudgetExhausted) {
      rep.budget_exhausted = true;
      break;
    }
  }
  return rep;
}

}  // namespace sparsehg
