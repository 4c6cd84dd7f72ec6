#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "sparsehg/bitset.hpp"
#include "sparsehg/freeness.hpp"

namespace sparsehg::detail {

struct SearchBudget {
  std::uint64_t limit = kDefaultSearchBudget;
  std::uint64_t used = 0;
  bool exceeded = false;

  // false once the budget is gone
  bool charge() {
    if (used >= limit) {
      exceeded = true;
      return false;
    }
    ++used;
    return true;
  }
};

/// Growable edge set used by the solver and the packer. Edges are pushed
/// with increasing ids and popped LIFO, which keeps the incidence lists
/// sorted. Satisfies the same read interface as Hypergraph.
class EdgeStore {
 public:
  EdgeStore(int n, int r)
      : n_(n), r_(r), incident_(n), packed_(r <= 8 && n <= 255) {}

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  int edge_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<int>& edge(int id) const { return verts_[id]; }
  const Bitset& edge_bits(int id) const { return bits_[id]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  int find_edge_id(const std::vector<int>& sorted) const {
    if (packed_) {
      auto it = packed_id_.find(pack(sorted));
      return it == packed_id_.end() ? -1 : it->second;
    }
    auto it = map_id_.find(sorted);
    return it == map_id_.end() ? -1 : it->second;
  }

  int add_edge(std::vector<int> sorted) {
    int id = edge_count();
    bits_.push_back(Bitset::from(n_, sorted));
    for (int v : sorted) incident_[v].push_back(id);
    if (packed_)
      packed_id_.emplace(pack(sorted), id);
    else
      map_id_.emplace(sorted, id);
    verts_.push_back(std::move(sorted));
    return id;
  }

  void pop_edge() {
    int id = edge_count() - 1;
    for (int v : verts_[id]) incident_[v].pop_back();
    if (packed_)
      packed_id_.erase(pack(verts_[id]));
    else
      map_id_.erase(verts_[id]);
    verts_.pop_back();
    bits_.pop_back();
  }

 private:
  static std::uint64_t pack(const std::vector<int>& sorted) {
    std::uint64_t key = 0;
    for (int v : sorted) key = (key << 8) | static_cast<std::uint64_t>(v + 1);
    return key;
  }

  int n_, r_;
  std::vector<std::vector<int>> verts_;
  std::vector<Bitset> bits_;
  std::vector<std::vector<int>> incident_;
  bool packed_;
  std::unordered_map<std::uint64_t, int> packed_id_;
  std::map<std::vector<int>, int> map_id_;
};

/// DFS for configurations of e edges whose union has at most v vertices.
///
/// Candidates with a required intersection are generated through the
/// incidence lists (or by probing subsets of the current union when only
/// contained edges can still fit); when a disjoint edge still fits, all
/// larger ids are scanned. Extensions run in increasing id order, which
/// makes the enumeration duplicate-free and the first hit lexicographically
/// least.
template <class Store>
class ViolationDfs {
 public:
  ViolationDfs(const Store& s, int v_limit, int e_size, SearchBudget& budget)
      : s_(s),
        v_(v_limit),
        e_(e_size),
        budget_(budget),
        r_(s.uniformity()),
        m_(s.edge_count()),
        union_bits_(s.vertex_count()),
        stamp_(m_, 0),
        in_cfg_(m_, 0),
        excluded_(m_, 0),
        cand_buf_(std::max(0, e_size) + 1),
        saved_union_(std::max(0, e_size) + 1, Bitset(s.vertex_count())) {}

  /// Lexicographically first violation, or nullopt.
  std::optional<Configuration> find_first() {
    witnesses_.clear();
    max_witnesses_ = 1;
    if (e_ <= m_) dfs(-1, -1);
    if (witnesses_.empty()) return std::nullopt;
    return witnesses_.front();
  }

  std::vector<Configuration> enumerate(std::size_t max_count) {
    witnesses_.clear();
    max_witnesses_ = max_count;
    if (max_count > 0 && e_ <= m_) dfs(-1, -1);
    return std::move(witnesses_);
  }

  /// Does some violating configuration contain root_id? connected_only
  /// restricts the search to configurations whose edges are linked to the
  /// root through nonempty intersections (complete only when disconnected
  /// violations are impossible; the callers state why).
  bool exists_through(int root_id, bool connected_only) {
    witnesses_.clear();
    max_witnesses_ = 1;
    if (e_ > m_ || e_ < 1) return false;
    push(root_id);
    if (usize_ <= v_) {
      if (connected_only)
        dfs_connected();
      else
        dfs(-1, root_id);
    }
    pop(root_id);
    return !witnesses_.empty();
  }

  const Configuration& witness() const { return witnesses_.front(); }

 private:
  // true = stop the whole search
  bool dfs(int min_id, int skip_id) {
    int depth = static_cast<int>(cfg_.size());
    if (depth == e_) return record_witness();
    auto& cand = cand_buf_[depth];
    gather(min_id, skip_id, cand);
    for (int id : cand) {
      if (!budget_.charge()) return true;
      push(id);
      bool stop = dfs(id, skip_id);
      pop(id);
      if (stop) return true;
    }
    return false;
  }

  bool dfs_connected() {
    if (static_cast<int>(cfg_.size()) == e_) return record_witness();
    int cand = smallest_intersecting();
    if (cand < 0) return false;
    if (!budget_.charge()) return true;
    if (union_bits_.union_count(s_.edge_bits(cand)) <= v_) {
      push(cand);
      bool stop = dfs_connected();
      pop(cand);
      if (stop) return true;
    }
    excluded_[cand] = 1;
    bool stop = budget_.exceeded ? true : dfs_connected();
    excluded_[cand] = 0;
    return stop;
  }

  int smallest_intersecting() const {
    int best = -1;
    for (int v : uverts_) {
      for (int id : s_.incident_edges(v)) {
        if (in_cfg_[id] || excluded_[id]) continue;
        if (best < 0 || id < best) best = id;
        break;  // incidence lists are ascending
      }
    }
    return best;
  }

  void gather(int min_id, int skip_id, std::vector<int>& out) {
    out.clear();
    int required = r_ - (v_ - usize_);
    if (cfg_.empty() || required <= 0) {
      // every remaining edge keeps the union within v
      for (int id = min_id + 1; id < m_; ++id)
        if (id != skip_id) out.push_back(id);
      return;
    }
    if (required == r_ && binomial_small(usize_, r_) <= 4 * (m_ - min_id)) {
      probe_contained(min_id, skip_id, out);
      std::sort(out.begin(), out.end());
      return;
    }
    ++epoch_;
    for (int v : uverts_) {
      for (int id : s_.incident_edges(v)) {
        if (id <= min_id || id == skip_id || stamp_[id] == epoch_) continue;
        stamp_[id] = epoch_;
        if (s_.edge_bits(id).intersection_count(union_bits_) >= required)
          out.push_back(id);
      }
    }
    std::sort(out.begin(), out.end());
  }

  // candidates fully contained in the current union, found by probing
  void probe_contained(int min_id, int skip_id, std::vector<int>& out) {
    std::vector<int> uv = uverts_;
    std::sort(uv.begin(), uv.end());
    int u = static_cast<int>(uv.size());
    if (u < r_) return;
    std::vector<int> sel(r_), probe(r_);
    for (int i = 0; i < r_; ++i) sel[i] = i;
    while (true) {
      for (int i = 0; i < r_; ++i) probe[i] = uv[sel[i]];
      int id = s_.find_edge_id(probe);
      if (id > min_id && id != skip_id) out.push_back(id);
      int i = r_ - 1;
      while (i >= 0 && sel[i] == u - r_ + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < r_; ++j) sel[j] = sel[j - 1] + 1;
    }
  }

  static long long binomial_small(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (int i = 1; i <= k; ++i) {
      acc = acc * (n - k + i) / i;
      if (acc > (1 << 20)) return acc;  // big enough to lose the heuristic
    }
    return acc;
  }

  void push(int id) {
    int depth = static_cast<int>(cfg_.size());
    saved_union_[depth] = union_bits_;
    saved_usize_.push_back(usize_);
    saved_uverts_size_.push_back(static_cast<int>(uverts_.size()));
    union_bits_ |= s_.edge_bits(id);
    for (int v : s_.edge(id))
      if (!saved_union_[depth].test(v)) uverts_.push_back(v);
    usize_ = union_bits_.count();
    cfg_.push_back(id);
    in_cfg_[id] = 1;
  }

  void pop(int id) {
    cfg_.pop_back();
    in_cfg_[id] = 0;
    int depth = static_cast<int>(cfg_.size());
    union_bits_ = saved_union_[depth];
    usize_ = saved_usize_.back();
    saved_usize_.pop_back();
    uverts_.resize(saved_uverts_size_.back());
    saved_uverts_size_.pop_back();
  }

  bool record_witness() {
    Configuration cfg;
    cfg.edge_ids = cfg_;
    std::sort(cfg.edge_ids.begin(), cfg.edge_ids.end());
    // recompute the union from the id arrays; must agree with the bitset
    std::vector<int> u;
    for (int id : cfg.edge_ids) {
      const auto& e = s_.edge(id);
      std::vector<int> merged;
      merged.reserve(u.size() + e.size());
      std::set_union(u.begin(), u.end(), e.begin(), e.end(), std::back_inserter(merged));
      u = std::move(merged);
    }
    if (static_cast<int>(u.size()) != usize_)
      throw Error("internal: witness union disagrees with bitset path");
    cfg.union_vertices = std::move(u);
    cfg.deficiency = e_ * r_ - static_cast<int>(cfg.union_vertices.size());
    witnesses_.push_back(std::move(cfg));
    return witnesses_.size() >= max_witnesses_;
  }

  const Store& s_;
  int v_, e_;
  SearchBudget& budget_;
  int r_, m_;

  std::vector<int> cfg_;
  Bitset union_bits_;
  int usize_ = 0;
  std::vector<int> uverts_;
  std::vector<int> saved_usize_;
  std::vector<int> saved_uverts_size_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<char> in_cfg_;
  std::vector<char> excluded_;
  std::vector<std::vector<int>> cand_buf_;
  std::vector<Bitset> saved_union_;

  std::vector<Configuration> witnesses_;
  std::size_t max_witnesses_ = 1;
};

}  // namespace sparsehg::detail
