#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsehg/freeness.hpp"
#include "sparsehg/hypergraph.hpp"
#include "sparsehg/rational.hpp"

namespace sparsehg {

/// Constants of the density-increment loop for uniformity r >= 3.
/// alpha is reported exactly when the radicand is a perfect square of a
/// rational (it is at r = 3), otherwise as radicand plus an approximation.
struct IncrementConstants {
  int r = 0;
  Rational alpha_squared;            // (3r^2-4r-14)/(3r^2+2r-8)
  std::optional<Rational> alpha;     // exact square root when it exists
  double alpha_value = 0.0;
  Rational delta;                    // 1/((3r-4)(r-1)+1)
  Rational density_threshold;        // max{1/(r(r-1)) - delta/(r(r-2)), 1/(2r^2-2r-5)}
};

IncrementConstants increment_constants(int r);

/// Structural measurements around a candidate bad configuration of t-1
/// edges. The report measures; it never asserts (the structural guarantees
/// hold only under the full constraint system).
struct StructuralReport {
  std::vector<int> x_vertices;            // X = union of the configuration
  int x_expected = 0;                     // (t-1)r-(t-2)k-1
  bool size_ok = false;                   // |X| == x_expected
  std::vector<int> i_of_x;                // edges with |A∩X| == k-1 outside it
  std::vector<int> intersection_violations;  // |A∩X| >= k outside it
  bool i_bound_is_exact = false;
  Rational i_bound;                       // max{e-t+1, f_sub} or the fallback
  bool i_bound_ok = false;                // |I(X)| < (n-|X|)/(r-k)
  bool exact_bound_ok = true;             // |I(X)| <= exact bound, when computed
  Hypergraph j_projection;                // {A \ X : A in I(X)}, re-indexed
  int j_duplicates = 0;                   // projected edges that collapsed
  std::uint64_t nodes = 0;                // solver nodes for the exact bound
};

/// Requires 1 <= k < r, 3 <= t <= e-1, and a configuration of t-1 distinct
/// edges of h whose union has at most (t-1)r-(t-2)k-1 vertices (otherwise
/// the input is rejected: it is not a bad configuration).
StructuralReport structural_analyze(const Hypergraph& h,
                                    const std::vector<int>& config_edge_ids,
                                    int k, int t, int e,
                                    std::uint64_t solver_budget = 2'000'000);

enum class IncrementStatus { kCompleted, kAbortedWrongUnionSize, kBudgetExhausted };

std::string to_string(IncrementStatus s);

struct IncrementStep {
  int j = 0;
  std::vector<int> x_vertices;            // ids within F_j
  std::vector<int> x_vertices_original;   // same vertices in input ids
  std::vector<int> config_edge_ids;       // the bad configuration in F_j
  std::vector<int> i_edge_ids;            // I(X_j)
  std::vector<int> light_edge_ids;        // 1 <= |A∩X| <= k-2 (empty at k=2)
  std::vector<int> anomalous_edge_ids;    // |A∩X| >= k outside the configuration
  long long e_before = 0;                 // e_j
  long long v_before = 0;                 // v_j
  Rational density_before;                // e_j / v_j^2
  bool step_inequality_ok = false;        // e_{j+1} > e_j - v_j/(r-2)
  bool cumulative_inequality_ok = false;  // e_j > e_0 - (sum_{i<j} v_i)/(r-2)
};

struct IncrementTrace {
  int n0 = 0, r = 0, t = 0, e = 0, k = 0;
  int x = 0;                              // vertices deleted per step
  IncrementConstants constants;
  // hypothesis flags: measured at entry, never assumed
  bool property_ok = false;               // input satisfied the constraint system
  bool density_ok = false;                // |F|/n^2 >= threshold
  bool k_is_two = false;                // density conclusions target k == 2
  IncrementStatus status = IncrementStatus::kCompleted;
  std::vector<IncrementStep> steps;
  long long e_final = 0, v_final = 0;
  // target conclusions of the loop, evaluated exactly and reported as data
  bool freeness_ok = false;               // F' is ((t-1)r-(t-2)k-1, t-1)-free
  bool vertex_bound_ok = false;           // v_final >= alpha * n
  bool density_conclusion_ok = false;     // e_final/v_final^2 >= e_0/n^2
  bool y_bound_ok = false;                // x*steps < (1-alpha) n
  std::optional<Configuration> abort_config;  // set when aborted
  std::uint64_t nodes = 0;
};

struct IncrementResult {
  Hypergraph result;
  IncrementTrace trace;
};

/// The deletion loop: while F_j contains t-1 edges spanning at most x =
/// (t-1)r-(t-2)k-1 vertices, remove X_j (the union of the lexicographically
/// first such configuration) together with every edge meeting it. Requires
/// r >= 3 and 3 <= t <= e-1; k defaults to 2, the only case with proven
/// density guarantees (other k run mechanically and are flagged).
IncrementResult density_increment(const Hypergraph& h, int t, int e, int k = 2,
                                  std::uint64_t budget = kDefaultSearchBudget);

struct CodegreeUpperReport {
  bool precondition_ok = false;           // h is (er-(e-1)k, e)-free
  SearchStatus precondition_status = SearchStatus::kFree;
  std::optional<Configuration> witness;   // when the precondition fails
  long long max_codegree = 0;
  std::optional<SubsetKey> max_subset;
  Rational degree_bound;                  // n/(r-k)
  bool degree_bound_ok = false;           // max codegree < n/(r-k)
  long long links_checked = 0;
  std::vector<SubsetKey> link_failures;   // links that are not suitably free
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Measures the codegree bound deg(T) < n/(r-k) over all (k-1)-subsets and
/// checks each positive link for (e(r-k+1)-(e-1), e)-freeness.
CodegreeUpperReport codegree_upper_check(const Hypergraph& h, int k, int e,
                                         std::uint64_t budget = kDefaultSearchBudget);

}  // namespace sparsehg
