#include "sparsehg/cleanup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace sparsehg {

namespace {

// all (size)-subsets of a sorted edge, in lexicographic order
void for_each_subset(const std::vector<int>& edge, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
  int r = static_cast<int>(edge.size());
  std::vector<int> sel(size), key(size);
  for (int i = 0; i < size; ++i) sel[i] = i;
  while (true) {
    for (int i = 0; i < size; ++i) key[i] = edge[sel[i]];
    fn(key);
    int i = size - 1;
    while (i >= 0 && sel[i] == r - size + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
  }
}

}  // namespace

PeelResult peel(const Hypergraph& h, int k, int e) {
  if (k < 2) throw Error("peel: k must be at least 2");
  if (k >= h.uniformity()) throw Error("peel: k must be less than the uniformity");
  if (e < 2) throw Error("peel: e must be at least 2");

  int s = k - 1;
  std::vector<char> alive(h.edge_count(), 1);
  std::map<std::vector<int>, std::vector<int>> members;  // subset -> edge ids
  for (int id = 0; id < h.edge_count(); ++id)
    for_each_subset(h.edge(id), s,
                    [&](const std::vector<int>& key) { members[key].push_back(id); });

  std::map<std::vector<int>, int> deg;
  std::set<std::vector<int>> offending;
  for (const auto& [key, ids] : members) {
    deg[key] = static_cast<int>(ids.size());
    if (!ids.empty() && static_cast<int>(ids.size()) < e) offending.insert(key);
  }

  PeelResult out;
  while (!offending.empty()) {
    const std::vector<int> key = *offending.begin();
    // least alive edge through the subset
    int victim = -1;
    for (int id : members[key]) {
      if (alive[id]) { victim = id; break; }
    }
    if (victim < 0) throw Error("internal: offending subset with no alive edge");

    alive[victim] = 0;
    out.log.entries.push_back({h.edge(victim), SubsetKey(key)});
    for_each_subset(h.edge(victim), s, [&](const std::vector<int>& sub) {
      int d = --deg[sub];
      if (d == 0 || d >= e)
        offending.erase(sub);
      else
        offending.insert(sub);
    });
  }

  std::vector<std::vector<int>> kept;
  for (int id = 0; id < h.edge_count(); ++id)
    if (alive[id]) kept.push_back(h.edge(id));
  out.peeled = Hypergraph::build(h.vertex_count(), h.uniformity(), kept);
  return out;
}

long long peel_bound(long long n, int k, int e) {
  if (k < 1) throw Error("peel_bound: k must be positive");
  if (e < 1) throw Error("peel_bound: e must be positive");
  long long c = binomial(n, k - 1);
  long long factor = e - 1;
  if (factor != 0 && c > std::numeric_limits<long long>::max() / factor)
    throw OverflowError("peel_bound(" + std::to_string(n) + "," + std::to_string(k) +
                        "," + std::to_string(e) + ") exceeds 64-bit range");
  return factor * c;
}

}  // namespace sparsehg
