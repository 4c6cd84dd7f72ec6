#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "sparsehg/cleanup.hpp"
#include "support.hpp"

using namespace sparsehg;

namespace {

// every positive (k-1)-codegree in h is at least e
bool codegree_property_holds(const Hypergraph& h, int k, int e) {
  std::map<std::vector<int>, int> deg;
  for (const auto& edge : h.edges()) {
    int s = k - 1;
    std::vector<int> sel(s), key(s);
    for (int i = 0; i < s; ++i) sel[i] = i;
    while (true) {
      for (int i = 0; i < s; ++i) key[i] = edge[sel[i]];
      ++deg[key];
      int i = s - 1;
      while (i >= 0 && sel[i] == h.uniformity() - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  for (const auto& [key, d] : deg)
    if (d > 0 && d < e) return false;
  return true;
}

// removal rule only, random choices: the guarantee must be order-robust
Hypergraph randomized_peel(std::mt19937_64& gen, const Hypergraph& h, int k, int e,
                           int* removed_out) {
  std::vector<std::vector<int>> edges = h.edges();
  int removed = 0;
  while (true) {
    auto cur = Hypergraph::build(h.vertex_count(), h.uniformity(), edges);
    std::vector<std::size_t> victims;
    for (std::size_t i = 0; i < cur.edges().size(); ++i) {
      const auto& edge = cur.edges()[i];
      bool offending = false;
      int s = k - 1;
      std::vector<int> sel(s), key(s);
      for (int j = 0; j < s; ++j) sel[j] = j;
      while (!offending) {
        for (int j = 0; j < s; ++j) key[j] = edge[sel[j]];
        long long d = cur.codegree(SubsetKey(key));
        if (d >= 1 && d < e) offending = true;
        int j = s - 1;
        while (j >= 0 && sel[j] == cur.uniformity() - s + j) --j;
        if (j < 0) break;
        ++sel[j];
        for (int l = j + 1; l < s; ++l) sel[l] = sel[l - 1] + 1;
      }
      if (offending) victims.push_back(i);
    }
    if (victims.empty()) {
      *removed_out = removed;
      return cur;
    }
    std::size_t pick = victims[gen() % victims.size()];
    edges = cur.edges();
    edges.erase(edges.begin() + static_cast<long>(pick));
    ++removed;
  }
}

}  // namespace

TEST_CASE("peel examples") {
  SUBCASE("low-degree pair collapses entirely") {
    auto h = Hypergraph::build(5, 3, {{0, 1, 2}, {0, 3, 4}});
    auto res = peel(h, 2, 3);
    CHECK(res.peeled.edge_count() == 0);
    CHECK(res.peeled.vertex_count() == 5);  // vertices stay
    CHECK(res.log.entries.size() == 2);
  }
  SUBCASE("complete graph survives untouched") {
    auto k5 = testsupport::complete_r_graph(5, 3);
    auto res = peel(k5, 2, 3);
    CHECK(res.peeled == k5);
    CHECK(res.log.entries.empty());
  }
  SUBCASE("a pendant edge goes first, blamed on a degree-1 vertex") {
    auto edges = testsupport::complete_r_graph(5, 3).edges();
    edges.push_back({0, 5, 6});
    auto h = Hypergraph::build(7, 3, edges);
    auto res = peel(h, 2, 3);
    CHECK(res.peeled ==
          Hypergraph::build(7, 3, testsupport::complete_r_graph(5, 3).edges()));
    CHECK(res.peeled.edge_count() == 10);
    REQUIRE(res.log.entries.size() == 1);
    CHECK(res.log.entries[0].edge == std::vector<int>{0, 5, 6});
    CHECK(res.log.entries[0].responsible.vertices == std::vector<int>{5});
  }
  SUBCASE("parameter validation") {
    auto h = Hypergraph::build(5, 3, {{0, 1, 2}});
    CHECK_THROWS_AS(peel(h, 1, 3), Error);
    CHECK_THROWS_AS(peel(h, 3, 3), Error);
    CHECK_THROWS_AS(peel(h, 2, 1), Error);
  }
}

TEST_CASE("peel_bound") {
  CHECK(peel_bound(5, 2, 3) == 10);
  CHECK(peel_bound(6, 3, 4) == 45);
  CHECK(peel_bound(10, 2, 2) == 10);
  CHECK_THROWS_AS(peel_bound(10'000'000'000LL, 4, 4), OverflowError);
}

TEST_CASE("peel invariants on random inputs") {
  std::mt19937_64 gen(59);
  for (int trial = 0; trial < 120; ++trial) {
    int r = 3 + static_cast<int>(gen() % 2);
    int k = 2 + static_cast<int>(gen() % (r - 2 + 1));
    if (k >= r) k = r - 1;
    int e = 2 + static_cast<int>(gen() % 3);
    int n = 6 + static_cast<int>(gen() % 5);
    auto h = testsupport::random_hypergraph(gen, n, r, 14);
    auto res = peel(h, k, e);

    CHECK(codegree_property_holds(res.peeled, k, e));
    CHECK(static_cast<long long>(res.log.entries.size()) <= peel_bound(n, k, e));
    CHECK(res.peeled.edge_count() + static_cast<int>(res.log.entries.size()) ==
          h.edge_count());

    // peeled edges form a subfamily
    for (const auto& edge : res.peeled.edges()) CHECK(h.find_edge_id(edge) >= 0);

    // each responsible subset is inside its edge and blamed at most e-1 times
    std::map<std::vector<int>, int> blame;
    for (const auto& entry : res.log.entries) {
      CHECK(std::includes(entry.edge.begin(), entry.edge.end(),
                          entry.responsible.vertices.begin(),
                          entry.responsible.vertices.end()));
      ++blame[entry.responsible.vertices];
    }
    for (const auto& [key, count] : blame) CHECK(count <= e - 1);

    // idempotence
    auto again = peel(res.peeled, k, e);
    CHECK(again.peeled == res.peeled);
    CHECK(again.log.entries.empty());

    // order robustness of the guarantee, not of the output
    if (trial < 30) {
      int removed = 0;
      auto rnd = randomized_peel(gen, h, k, e, &removed);
      CHECK(codegree_property_holds(rnd, k, e));
      CHECK(removed <= peel_bound(n, k, e));
    }
  }
}
