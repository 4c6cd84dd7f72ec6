#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparsehg/freeness.hpp"
#include "sparsehg/hypergraph.hpp"
#include "sparsehg/rational.hpp"

namespace sparsehg {

enum class SolveStatus { kProvenOptimal, kBudgetExhausted };

std::string to_string(SolveStatus s);

struct SearchResult {
  long long optimum = 0;        // best value found (exact when proven)
  Hypergraph witness;           // one extremal graph of that size
  std::uint64_t nodes = 0;
  SolveStatus status = SolveStatus::kProvenOptimal;
  std::vector<std::string> certificates;  // pruning rules the run relied on
};

using ProgressFn = std::function<void(std::uint64_t nodes, long long incumbent)>;

/// Exact maximum edge count over all simple r-graphs on [0,n) satisfying
/// every constraint of the family (and the codegree rule, when present).
///
/// Branch and bound over candidate edges in lexicographic order. Freeness
/// violations prune on inclusion (the constraints are downward closed);
/// vertex relabeling lets the first included edge be fixed to {0..r-1}
/// (value-preserving; the witness is only "a" witness). The codegree rule
/// is not downward closed: branches die when some positive-degree subset
/// can no longer reach degree e with the undecided candidates.
SearchResult exact_max(int n, int r, const ConstraintFamily& fam,
                       std::uint64_t budget = kDefaultSearchBudget,
                       const ProgressFn& progress = {});

struct ChainEntry {
  int t = 0;  // 0 for the unconstrained value f
  SearchResult result;
};

struct ChainReport {
  int n = 0, r = 0, e = 0, k = 0;
  std::vector<ChainEntry> entries;  // f, f^(e-1), ..., f^(2)
  bool all_proven = false;
  bool chain_ok = false;   // f >= f^(e-1) >= ... >= f^(2)
  bool peel_bound_ok = false;   // f - (e-1)*C(n,k-1) <= f^(e-1)
  long long peel_bound_lhs = 0;
};

/// Computes f and f^(t) for t = e-1 .. 2 at one n and verifies the monotone
/// chain plus the peeling lower bound. A budget-exhausted sub-instance
/// poisons the verdicts (all_proven false).
ChainReport chain_check(int n, int r, int e, int k = 2,
                        std::uint64_t budget = kDefaultSearchBudget);

enum class PackOrder { kLex, kRandom };

struct PackingCheck {
  int t = 0;
  FreenessConstraint constraint;
  SearchStatus status = SearchStatus::kFree;
  std::uint64_t nodes = 0;
};

struct PackingResult {
  Hypergraph graph;
  int n = 0, r = 0, e = 0;
  std::uint64_t seed = 0;
  PackOrder order = PackOrder::kLex;
  bool maximal = false;
  Rational target;   // n^2 / (r^2 - r)
  Rational ratio;    // edge_count / target
  std::vector<PackingCheck> checks;  // full verification per t = 2..e
};

/// Greedy conflict-free packing: candidates are all r-subsets of [0,n) in
/// lexicographic or seed-shuffled order; an edge is kept when it creates no
/// (tr-2(t-1), t)-violation for any 2 <= t <= e. Constraints are tested in
/// increasing t, so a new bad configuration is always connected to the new
/// edge (components of size c satisfy deficiency <= 2c-3 once the smaller
/// constraints hold), and the insertion search stays local. The finished
/// packing is re-verified with the full canonical search.
PackingResult greedy_pack(int n, int r, int e, std::uint64_t seed = 0,
                          PackOrder order = PackOrder::kLex,
                          std::uint64_t verify_budget = 200'000'000,
                          const ProgressFn& progress = {});

enum class BoundStatus { kCertified, kRejected, kBudgetExhausted };

struct WitnessBound {
  BoundStatus status = BoundStatus::kRejected;
  Rational bound;  // |F| / m^k when certified
  std::optional<FreenessConstraint> failed_constraint;
  std::optional<Configuration> rejection_witness;
  std::uint64_t nodes = 0;
};

/// Certifies liminf f_r(n, er-(e-1)k, e) / n^k >= |F| / m^k from a single
/// witness F on m vertices, after verifying F is (er-(e-1)k, e)-free and
/// (ir-(i-1)k-1, i)-free for every 2 <= i <= e-1.
WitnessBound lower_bound_from_witness(const Hypergraph& f, int r, int k, int e,
                                      std::uint64_t budget = kDefaultSearchBudget);

struct ExponentBounds {
  Rational lower_exponent;    // (er - v) / (e - 1)
  long long upper_exponent;   // its ceiling
  double n_to_lower = 0.0;
  double n_to_upper = 0.0;
};

/// The two exponents of the general bound Omega(n^((er-v)/(e-1))) =
/// f_r(n,v,e) = O(n^ceil). Requires e >= 2 and v >= r.
ExponentBounds exponent_bounds(long long n, int r, int v, int e);

struct LimitRecord {
  int r = 0, k = 0, e = 0;
  std::optional<Rational> value;
  std::string source;
  std::vector<std::string> flags;
};

/// Known values of lim f_r(n, er-(e-1)k, e) / n^k, exact, with a source tag
/// per entry and consistency flags where the stated values and the general
/// closed forms disagree. Returns no value for parameters still open.
LimitRecord known_limit(int r, int k, int e);

struct SizeCheckReport {
  bool precondition_ok = false;
  SearchStatus precondition_status = SearchStatus::kFree;
  std::optional<Configuration> witness;  // when not (er-(e-1), e)-free
  long long edge_count = 0;
  Rational bound;      // n / (r-1)
  bool bound_ok = false;
  std::uint64_t nodes = 0;
};

/// Checks |H| < n/(r-1) for a verified (er-(e-1), e)-free H (the k=1 size
/// bound, used as a solver cross-check).
SizeCheckReport size_bound_check(const Hypergraph& h, int e,
                               std::uint64_t budget = kDefaultSearchBudget);

}  // namespace sparsehg
