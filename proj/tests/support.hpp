#pragma once

// Shared test fixtures: independent oracles (plain subset enumeration over
// sorted id arrays, no bitsets, no pruning shared with the library) and
// input generators.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sparsehg/freeness.hpp"
#include "sparsehg/hypergraph.hpp"

namespace testsupport {

using sparsehg::Hypergraph;

inline std::vector<int> sorted_union(const Hypergraph& h, const std::vector<int>& ids) {
  std::set<int> u;
  for (int id : ids)
    for (int v : h.edge(id)) u.insert(v);
  return {u.begin(), u.end()};
}

// first violating e-subset in lexicographic order of ascending id tuples
inline std::optional<std::vector<int>> brute_force_violation(const Hypergraph& h,
                                                             int v, int e) {
  int m = h.edge_count();
  if (e > m || e < 1) return std::nullopt;
  std::vector<int> sel(e);
  for (int i = 0; i < e; ++i) sel[i] = i;
  while (true) {
    if (static_cast<int>(sorted_union(h, sel).size()) <= v) return sel;
    int i = e - 1;
    while (i >= 0 && sel[i] == m - e + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < e; ++j) sel[j] = sel[j - 1] + 1;
  }
  return std::nullopt;
}

inline long long brute_force_violation_count(const Hypergraph& h, int v, int e) {
  int m = h.edge_count();
  long long count = 0;
  if (e > m || e < 1) return 0;
  std::vector<int> sel(e);
  for (int i = 0; i < e; ++i) sel[i] = i;
  while (true) {
    if (static_cast<int>(sorted_union(h, sel).size()) <= v) ++count;
    int i = e - 1;
    while (i >= 0 && sel[i] == m - e + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < e; ++j) sel[j] = sel[j - 1] + 1;
  }
  return count;
}

// Exhaustive maximum: depth-first over candidate edges in lexicographic
// order, keeping a graph only while it stays free (checked from scratch by
// subset enumeration). No incumbent bound, no symmetry breaking.
struct ExhaustiveOracle {
  int n, r, v, e;
  std::vector<std::vector<int>> cands;
  std::vector<std::vector<int>> chosen;
  long long best = 0;
  long long nodes = 0;

  ExhaustiveOracle(int n_, int r_, int v_, int e_) : n(n_), r(r_), v(v_), e(e_) {
    std::vector<int> sel(r);
    if (n >= r) {
      for (int i = 0; i < r; ++i) sel[i] = i;
      while (true) {
        cands.push_back(sel);
        int i = r - 1;
        while (i >= 0 && sel[i] == n - r + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }

  bool still_free_with(const std::vector<int>& cand) const {
    // every e-subset that includes cand
    int m = static_cast<int>(chosen.size());
    if (m + 1 < e) return true;
    std::vector<int> sel(e - 1);
    for (int i = 0; i < e - 1; ++i) sel[i] = i;
    while (true) {
      std::set<int> u(cand.begin(), cand.end());
      for (int i = 0; i < e - 1; ++i) u.insert(chosen[sel[i]].begin(), chosen[sel[i]].end());
      if (static_cast<int>(u.size()) <= v) return false;
      if (e == 1) break;
      int i = e - 2;
      while (i >= 0 && sel[i] == m - (e - 1) + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < e - 1; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
  }

  void rec(std::size_t start) {
    best = std::max(best, static_cast<long long>(chosen.size()));
    for (std::size_t i = start; i < cands.size(); ++i) {
      ++nodes;
      if (still_free_with(cands[i])) {
        chosen.push_back(cands[i]);
        rec(i + 1);
        chosen.pop_back();
      }
    }
  }

  long long run() {
    chosen.clear();
    best = 0;
    rec(0);
    return best;
  }
};

// Family-aware exhaustive maximum: enumerates every family-free graph by
// depth-first search (freeness is downward closed, so pruning on it is
// sound) and evaluates the codegree rule from scratch on each one.
struct FamilyOracle {
  int n, r;
  sparsehg::ConstraintFamily fam;
  std::vector<std::vector<int>> cands;
  std::vector<std::vector<int>> chosen;
  long long best = 0;

  FamilyOracle(int n_, int r_, sparsehg::ConstraintFamily fam_)
      : n(n_), r(r_), fam(std::move(fam_)) {
    if (n >= r) {
      std::vector<int> sel(r);
      for (int i = 0; i < r; ++i) sel[i] = i;
      while (true) {
        cands.push_back(sel);
        int i = r - 1;
        while (i >= 0 && sel[i] == n - r + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }

  bool free_with(const std::vector<int>& cand) const {
    for (const auto& c : fam.constraints) {
      int m = static_cast<int>(chosen.size());
      if (m + 1 < c.e) continue;
      std::vector<int> sel(c.e - 1);
      for (int i = 0; i < c.e - 1; ++i) sel[i] = i;
      while (true) {
        std::set<int> u(cand.begin(), cand.end());
        for (int i = 0; i < c.e - 1; ++i)
          u.insert(chosen[sel[i]].begin(), chosen[sel[i]].end());
        if (static_cast<int>(u.size()) <= c.v) return false;
        int i = c.e - 2;
        while (i >= 0 && sel[i] == m - (c.e - 1) + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < c.e - 1; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
    return true;
  }

  bool rule_ok() const {
    if (!fam.codegree_rule) return true;
    int k = fam.codegree_rule->k, e = fam.codegree_rule->e;
    if (k == 1) {
      long long m = static_cast<long long>(chosen.size());
      return m == 0 || m >= e;
    }
    std::map<std::vector<int>, int> deg;
    for (const auto& edge : chosen) {
      std::vector<int> sel(k - 1), key(k - 1);
      for (int i = 0; i < k - 1; ++i) sel[i] = i;
      while (true) {
        for (int i = 0; i < k - 1; ++i) key[i] = edge[sel[i]];
        ++deg[key];
        int i = k - 2;
        while (i >= 0 && sel[i] == r - (k - 1) + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < k - 1; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
    for (const auto& [key, d] : deg)
      if (d > 0 && d < e) return false;
    return true;
  }

  void rec(std::size_t start) {
    if (rule_ok()) best = std::max(best, static_cast<long long>(chosen.size()));
    for (std::size_t i = start; i < cands.size(); ++i) {
      if (free_with(cands[i])) {
        chosen.push_back(cands[i]);
        rec(i + 1);
        chosen.pop_back();
      }
    }
  }

  long long run() {
    chosen.clear();
    best = 0;
    rec(0);
    return best;
  }
};

inline Hypergraph fano() {
  return Hypergraph::build(7, 3,
                           {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                            {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

inline Hypergraph complete_r_graph(int n, int r) {
  std::vector<std::vector<int>> edges;
  std::vector<int> sel(r);
  for (int i = 0; i < r; ++i) sel[i] = i;
  while (true) {
    edges.push_back(sel);
    int i = r - 1;
    while (i >= 0 && sel[i] == n - r + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
  }
  return Hypergraph::build(n, r, edges);
}

inline Hypergraph random_hypergraph(std::mt19937_64& gen, int n, int r, int max_edges) {
  int edges = static_cast<int>(gen() % (max_edges + 1));
  std::vector<std::vector<int>> out;
  for (int i = 0; i < edges; ++i) {
    std::set<int> e;
    while (static_cast<int>(e.size()) < r) e.insert(static_cast<int>(gen() % n));
    out.emplace_back(e.begin(), e.end());
  }
  return Hypergraph::build(n, r, out);
}

// Instance with planted bad configurations for the increment loop: g
// vertex-disjoint gadgets (t-1 edges spanning exactly (t-1)r-2(t-2)-1
// vertices, k = 2) plus satellites touching one gadget in one vertex.
struct GadgetInstance {
  Hypergraph graph;
  int gadgets;
  std::vector<int> satellites_per_gadget;
};

// Gadget shape: base edge {0..r-1}, t-3 petals through the pair {0,1} with
// r-2 fresh vertices each, and one closing edge of overlap 3 with the union
// ({0,1,2}+fresh for r>=4; {0,2,petal-vertex} for r=3, which needs t>=4).
// Union is exactly (t-1)(r-2)+1 = x, and it is the only (t-1)-subset with
// union <= x; satellites meet it in exactly one vertex.
inline GadgetInstance planted_increment_instance(std::mt19937_64& gen, int r, int t,
                                                 int max_gadgets, int max_satellites) {
  if (r < 3 || t < 3 || (r == 3 && t < 4))
    throw std::invalid_argument("planted_increment_instance: unsupported (r,t)");
  int g = 1 + static_cast<int>(gen() % max_gadgets);
  std::vector<std::vector<int>> edges;
  std::vector<int> sats;
  int next = 0;
  for (int gi = 0; gi < g; ++gi) {
    std::vector<int> gadget_vertices;
    auto fresh = [&]() {
      gadget_vertices.push_back(next);
      return next++;
    };
    std::vector<int> base;
    for (int i = 0; i < r; ++i) base.push_back(fresh());
    edges.push_back(base);
    int first_petal_vertex = -1;
    for (int i = 0; i < t - 3; ++i) {
      std::vector<int> petal{base[0], base[1]};
      for (int j = 0; j < r - 2; ++j) petal.push_back(fresh());
      if (first_petal_vertex < 0) first_petal_vertex = petal[2];
      edges.push_back(petal);
    }
    std::vector<int> closer;
    if (r >= 4) {
      closer = {base[0], base[1], base[2]};
      for (int j = 0; j < r - 3; ++j) closer.push_back(fresh());
    } else {
      closer = {base[0], base[2], first_petal_vertex};
    }
    edges.push_back(closer);

    int n_sat = static_cast<int>(gen() % (max_satellites + 1));
    sats.push_back(n_sat);
    for (int si = 0; si < n_sat; ++si) {
      std::vector<int> s;
      s.push_back(gadget_vertices[gen() % gadget_vertices.size()]);
      for (int j = 0; j < r - 1; ++j) s.push_back(next++);
      edges.push_back(s);
    }
  }
  int n = next + static_cast<int>(gen() % 3);  // a few isolated vertices
  return {Hypergraph::build(n, r, edges), g, sats};
}

}  // namespace testsupport
