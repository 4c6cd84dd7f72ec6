#pragma once

#include "sparsehg/hypergraph.hpp"

namespace sparsehg {

struct PeelResult {
  Hypergraph peeled;
  RemovalLog log;
};

/// Repeatedly removes an edge containing a (k-1)-subset whose codegree lies
/// in [1, e-1], until every (k-1)-subset has codegree 0 or >= e. The vertex
/// set is kept; only edges go. Canonical order: the lexicographically least
/// offending subset is processed first and loses its least incident edge,
/// so logs and outputs are reproducible. Requires 2 <= k < r, e >= 2.
PeelResult peel(const Hypergraph& h, int k, int e);

/// (e-1) * C(n, k-1); throws OverflowError past 64 bits.
long long peel_bound(long long n, int k, int e);

}  // namespace sparsehg
