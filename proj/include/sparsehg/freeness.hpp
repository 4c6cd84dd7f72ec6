#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsehg/hypergraph.hpp"

namespace sparsehg {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// "No e distinct edges span at most v vertices."
struct FreenessConstraint {
  int v = 0;
  int e = 0;
};

/// Every (k-1)-subset has codegree 0 or at least e.
struct CodegreeRule {
  int k = 0;
  int e = 0;
};

struct ConstraintFamily {
  std::vector<FreenessConstraint> constraints;
  std::optional<CodegreeRule> codegree_rule;
};

/// A witness that a freeness constraint fails: e' edges whose union X is
/// small. deficiency == e' * r - |X|.
struct Configuration {
  std::vector<int> edge_ids;
  std::vector<int> union_vertices;
  int deficiency = 0;
};

enum class SearchStatus { kFree, kViolation, kBudgetExhausted };

std::string to_string(SearchStatus s);

struct ViolationResult {
  SearchStatus status = SearchStatus::kFree;
  std::optional<Configuration> witness;
  std::uint64_t nodes = 0;
};

/// Throws unless v >= r and e >= 2.
void validate_constraint(int r, const FreenessConstraint& c);

/// Canonical depth-first search for a violating configuration. The search
/// extends partial configurations in increasing edge-id order, so the
/// returned witness is the lexicographically first violating edge set.
/// Witness selection is single-threaded. A node is one extension of a
/// partial configuration; running out of budget is reported as a distinct
/// status, never as freeness.
ViolationResult find_violation(const Hypergraph& h, const FreenessConstraint& c,
                               std::uint64_t budget = kDefaultSearchBudget);

struct EnumerationResult {
  std::vector<Configuration> witnesses;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Collects up to max_count violations in canonical order.
EnumerationResult enumerate_violations(const Hypergraph& h, const FreenessConstraint& c,
                                       std::size_t max_count,
                                       std::uint64_t budget = kDefaultSearchBudget);

struct ConstraintVerdict {
  FreenessConstraint constraint;
  SearchStatus status = SearchStatus::kFree;
  std::optional<Configuration> witness;
  std::uint64_t nodes = 0;
};

struct CodegreeVerdict {
  bool checked = false;
  bool satisfied = true;
  std::optional<SubsetKey> offender;  // lexicographically least
  long long offender_degree = 0;
  long long offender_count = 0;
};

struct FamilyReport {
  std::vector<ConstraintVerdict> constraints;
  CodegreeVerdict codegree;

  bool all_free() const {
    for (const auto& c : constraints)
      if (c.status != SearchStatus::kFree) return false;
    return !codegree.checked || codegree.satisfied;
  }
  bool budget_exhausted() const {
    for (const auto& c : constraints)
      if (c.status == SearchStatus::kBudgetExhausted) return true;
    return false;
  }
};

/// Evaluates every constraint (no short-circuiting) plus the codegree rule.
/// threads > 1 evaluates constraints concurrently; the report order is the
/// family order either way.
FamilyReport is_family_free(const Hypergraph& h, const ConstraintFamily& fam,
                            std::uint64_t budget = kDefaultSearchBudget,
                            int threads = 1);

/// The constraint system behind f_r^(t): (er-(e-1)k, e)-freeness,
/// (ir-(i-1)k-1, i)-freeness for t <= i <= e-1, and the codegree rule
/// (k, e). Requires r > k >= 1, e >= 3, 2 <= t <= e-1.
ConstraintFamily property_family(int r, int k, int e, int t);

}  // namespace sparsehg
