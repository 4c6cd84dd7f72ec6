#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sparsehg/bitset.hpp"
#include "sparsehg/rational.hpp"

namespace sparsehg {

/// Raised by parse() with the 1-based line the problem was found on.
struct ParseError : Error {
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

/// A strictly increasing set of vertex ids, usually of size k-1.
struct SubsetKey {
  SubsetKey() = default;
  explicit SubsetKey(std::vector<int> ids);

  std::size_t size() const { return vertices.size(); }
  std::string str() const;

  friend bool operator==(const SubsetKey& a, const SubsetKey& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const SubsetKey& a, const SubsetKey& b) {
    return a.vertices < b.vertices;
  }

  std::vector<int> vertices;
};

/// One peeling step: an edge together with the subset whose codegree was
/// in [1, e-1] when the edge was removed.
struct RemovalEntry {
  std::vector<int> edge;
  SubsetKey responsible;
};

struct RemovalLog {
  std::vector<RemovalEntry> entries;
};

struct ReindexedGraph;

/// Immutable r-uniform hypergraph on dense vertex ids 0..n-1.
///
/// Edges are stored twice: as strictly sorted id arrays in lexicographic
/// list order (the canonical form, used for all reported data) and as
/// bitsets (used for set arithmetic; must agree with the array path).
/// Values are cheap to copy and safe to share across threads; the subset
/// index is built lazily per subset size under an internal lock.
class Hypergraph {
 public:
  Hypergraph();  // the empty 2-graph on 0 vertices

  /// Normalizes (sorts edges, merges duplicates) and validates: every
  /// input edge must have exactly r distinct ids in [0, n).
  static Hypergraph build(int n, int r, const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return d_->n; }
  int uniformity() const { return d_->r; }
  int edge_count() const { return static_cast<int>(d_->edges.size()); }

  const std::vector<std::vector<int>>& edges() const { return d_->edges; }
  const std::vector<int>& edge(int id) const;
  const Bitset& edge_bits(int id) const;

  /// Edge ids through a vertex, ascending.
  const std::vector<int>& incident_edges(int v) const;

  /// Id of a strictly sorted r-set, or -1 when absent.
  int find_edge_id(const std::vector<int>& sorted_vertices) const;

  /// Number of edges containing T; requires |T| < r.
  long long codegree(const SubsetKey& t) const;

  /// Edge ids containing T, ascending (empty for codegree 0).
  const std::vector<int>& edges_containing(const SubsetKey& t) const;

  /// |union of the given edges|; duplicate ids are collapsed.
  long long union_size(const std::vector<int>& edge_ids) const;

  /// (r-|T|)-graph {A \ T : T ⊆ A}, vertices [0,n) \ T densely re-indexed.
  ReindexedGraph link(const SubsetKey& t) const;

  /// Removes X and every edge meeting X; survivors densely re-indexed.
  ReindexedGraph delete_vertices(const std::vector<int>& xs) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.d_->n == b.d_->n && a.d_->r == b.d_->r && a.d_->edges == b.d_->edges;
  }

 private:
  struct Data {
    int n = 0;
    int r = 2;
    std::vector<std::vector<int>> edges;
    std::vector<Bitset> bits;
    std::vector<std::vector<int>> incident;        // by vertex
    bool packed = false;                            // r<=8 && n<=255
    std::unordered_map<std::uint64_t, int> packed_id;
    std::map<std::vector<int>, int> map_id;

    mutable std::mutex index_mu;
    mutable std::map<int, std::map<std::vector<int>, std::vector<int>>> subset_index;

    const std::map<std::vector<int>, std::vector<int>>& index_for(int size) const;
  };

  explicit Hypergraph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// A shrunken hypergraph together with the dense re-indexing in both
/// directions; new_of_old[v] is -1 for removed vertices.
struct ReindexedGraph {
  Hypergraph graph;
  std::vector<int> old_of_new;
  std::vector<int> new_of_old;
};

/// Strict reader for the text format: "n r m" header then m lines of r
/// strictly increasing ids, single spaces, LF endings. Errors carry line
/// numbers. Edge list order and duplicates are normalized via build().
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical writer; parse(serialize(h)) == h and serialize∘parse is the
/// identity on canonical files.
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace sparsehg
