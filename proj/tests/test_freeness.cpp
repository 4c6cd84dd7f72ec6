#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "sparsehg/detail/violation_search.hpp"
#include "sparsehg/freeness.hpp"
#include "support.hpp"

using namespace sparsehg;
using testsupport::fano;

TEST_CASE("find_violation basics") {
  auto k4 = testsupport::complete_r_graph(4, 3);
  auto res = find_violation(k4, {5, 3});
  REQUIRE(res.status == SearchStatus::kViolation);
  CHECK(res.witness->edge_ids.size() == 3);
  CHECK(res.witness->union_vertices.size() == 4);
  CHECK(res.witness->deficiency == 3 * 3 - 4);

  SUBCASE("fano is (5,3)-free") {
    CHECK(!testsupport::brute_force_violation(fano(), 5, 3));  // the oracle agrees
    CHECK(find_violation(fano(), {5, 3}).status == SearchStatus::kFree);
  }
  SUBCASE("fewer than e edges is vacuously free") {
    auto h = Hypergraph::build(6, 3, {{0, 1, 2}, {0, 1, 3}});
    CHECK(find_violation(h, {9, 3}).status == SearchStatus::kFree);
  }
  SUBCASE("invalid constraints are rejected") {
    CHECK_THROWS_AS(find_violation(k4, {2, 3}), Error);  // v < r
    CHECK_THROWS_AS(find_violation(k4, {5, 1}), Error);  // e < 2
  }
  SUBCASE("budget exhaustion is a distinct status") {
    auto big = testsupport::complete_r_graph(9, 3);
    auto r2 = find_violation(big, {27, 4}, 2);
    CHECK(r2.status != SearchStatus::kFree);
  }
}

TEST_CASE("witness is the lexicographically first violation") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = testsupport::random_hypergraph(gen, 8, 3, 10);
    for (int e = 2; e <= 3; ++e) {
      for (int v = 3; v <= 8; ++v) {
        auto expected = testsupport::brute_force_violation(h, v, e);
        auto got = find_violation(h, {v, e});
        if (expected) {
          REQUIRE(got.status == SearchStatus::kViolation);
          CHECK(got.witness->edge_ids == *expected);
          CHECK(got.witness->union_vertices == testsupport::sorted_union(h, *expected));
        } else {
          CHECK(got.status == SearchStatus::kFree);
        }
      }
    }
  }
}

TEST_CASE("monotone under edge removal") {
  // a subgraph of a free graph stays free
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = testsupport::random_hypergraph(gen, 9, 3, 9);
    int v = 4 + static_cast<int>(gen() % 4);
    int e = 2 + static_cast<int>(gen() % 2);
    if (find_violation(h, {v, e}).status != SearchStatus::kFree) continue;
    std::vector<std::vector<int>> sub;
    for (const auto& edge : h.edges())
      if (gen() % 2) sub.push_back(edge);
    auto hsub = Hypergraph::build(9, 3, sub);
    CHECK(find_violation(hsub, {v, e}).status == SearchStatus::kFree);
  }
}

TEST_CASE("deficiency identity") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = testsupport::random_hypergraph(gen, 8, 3, 10);
    auto all = enumerate_violations(h, {5, 3}, 1000);
    for (const auto& cfg : all.witnesses) {
      CHECK(cfg.deficiency ==
            3 * 3 - static_cast<int>(cfg.union_vertices.size()));
      CHECK(static_cast<int>(cfg.union_vertices.size()) <= 5);
      CHECK(cfg.edge_ids.size() == 3);
    }
    CHECK(static_cast<long long>(all.witnesses.size()) ==
          testsupport::brute_force_violation_count(h, 5, 3));
  }
}

TEST_CASE("enumerate_violations") {
  auto k4 = testsupport::complete_r_graph(4, 3);
  auto all = enumerate_violations(k4, {5, 3}, 10);
  CHECK(all.witnesses.size() == 4);  // C(4,3) triples of edges
  for (const auto& cfg : all.witnesses) CHECK(cfg.union_vertices.size() == 4);

  CHECK(enumerate_violations(fano(), {5, 3}, 10).witnesses.empty());

  auto none = enumerate_violations(k4, {5, 3}, 0);
  CHECK(none.witnesses.empty());
  CHECK(none.nodes == 0);
}

TEST_CASE("is_family_free") {
  SUBCASE("fano: (5,3)-free with every point on three lines") {
    ConstraintFamily fam;
    fam.constraints.push_back({5, 3});
    fam.codegree_rule = CodegreeRule{2, 3};
    auto rep = is_family_free(fano(), fam);
    CHECK(rep.all_free());
    CHECK(rep.codegree.checked);
    CHECK(rep.codegree.satisfied);
  }
  SUBCASE("degree-1 vertex breaks the rule") {
    auto h = Hypergraph::build(6, 3, {{1, 2, 3}, {1, 4, 5}});
    ConstraintFamily fam;
    fam.constraints.push_back({4, 2});
    fam.codegree_rule = CodegreeRule{2, 3};
    auto rep = is_family_free(h, fam);
    CHECK(rep.constraints[0].status == SearchStatus::kFree);
    CHECK(!rep.codegree.satisfied);
    REQUIRE(rep.codegree.offender);
    // the least offender is vertex 1 (degree 2 < 3); vertex 2 offends too
    CHECK(rep.codegree.offender->vertices == std::vector<int>{1});
    CHECK(rep.codegree.offender_degree == 2);
    CHECK(rep.codegree.offender_count == 5);
  }
  SUBCASE("empty graph satisfies everything") {
    auto h = Hypergraph::build(5, 3, {});
    ConstraintFamily fam;
    fam.constraints.push_back({5, 3});
    fam.constraints.push_back({7, 2});
    fam.codegree_rule = CodegreeRule{2, 4};
    auto rep = is_family_free(h, fam);
    CHECK(rep.all_free());
  }
  SUBCASE("multithreaded evaluation gives the same report") {
    std::mt19937_64 gen(43);
    auto h = testsupport::random_hypergraph(gen, 9, 3, 11);
    ConstraintFamily fam;
    for (int v = 4; v <= 7; ++v) fam.constraints.push_back({v, 3});
    auto seq = is_family_free(h, fam, kDefaultSearchBudget, 1);
    auto par = is_family_free(h, fam, kDefaultSearchBudget, 4);
    REQUIRE(seq.constraints.size() == par.constraints.size());
    for (std::size_t i = 0; i < seq.constraints.size(); ++i) {
      CHECK(seq.constraints[i].status == par.constraints[i].status);
      if (seq.constraints[i].witness)
        CHECK(seq.constraints[i].witness->edge_ids == par.constraints[i].witness->edge_ids);
    }
  }
}

TEST_CASE("property_family spells out the constraint system") {
  auto fam = property_family(3, 2, 4, 2);
  // i = 2, 3 at thresholds ir-(i-1)k-1, then (er-(e-1)k, e)
  REQUIRE(fam.constraints.size() == 3);
  CHECK(fam.constraints[0].v == 3);
  CHECK(fam.constraints[0].e == 2);
  CHECK(fam.constraints[1].v == 4);
  CHECK(fam.constraints[1].e == 3);
  CHECK(fam.constraints[2].v == 6);
  CHECK(fam.constraints[2].e == 4);
  REQUIRE(fam.codegree_rule);
  CHECK(fam.codegree_rule->k == 2);
  CHECK(fam.codegree_rule->e == 4);
  CHECK_THROWS_AS(property_family(3, 2, 4, 4), Error);
}

TEST_CASE("connected rooted search matches the full rooted search in packing runs") {
  // when every smaller packing constraint already holds, a new bad
  // configuration must be connected to the inserted edge; replay a greedy
  // run and compare both search modes at every decision
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 6; ++trial) {
    int r = 3 + static_cast<int>(gen() % 2);
    int n = 10 + static_cast<int>(gen() % 5);
    int e = 3 + static_cast<int>(gen() % 2);
    detail::EdgeStore store(n, r);
    auto h = testsupport::complete_r_graph(n, r);
    std::vector<int> order(h.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[gen() % i]);

    detail::SearchBudget unmetered{std::numeric_limits<std::uint64_t>::max()};
    for (int ci : order) {
      int id = store.add_edge(h.edge(ci));
      bool keep = true;
      for (int t = 2; t <= e && keep; ++t) {
        FreenessConstraint c{t * r - 2 * (t - 1), t};
        detail::ViolationDfs<detail::EdgeStore> conn(store, c.v, c.e, unmetered);
        detail::ViolationDfs<detail::EdgeStore> full(store, c.v, c.e, unmetered);
        bool hit_conn = conn.exists_through(id, true);
        bool hit_full = full.exists_through(id, false);
        CHECK(hit_conn == hit_full);
        keep = !hit_full;
      }
      if (!keep) store.pop_edge();
    }
  }
}

TEST_CASE("degenerate constraints use the same code path") {
  // v >= e*r: any e distinct edges violate
  auto h = Hypergraph::build(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  auto res = find_violation(h, {9, 3});
  REQUIRE(res.status == SearchStatus::kViolation);
  CHECK(res.witness->edge_ids == std::vector<int>{0, 1, 2});
  CHECK(res.witness->deficiency == 0);
}
