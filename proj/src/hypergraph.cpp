#include "sparsehg/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace sparsehg {

namespace {

std::string ids_str(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

std::uint64_t pack_edge(const std::vector<int>& sorted) {
  std::uint64_t key = 0;
  for (int v : sorted) key = (key << 8) | static_cast<std::uint64_t>(v + 1);
  return key;
}

}  // namespace

SubsetKey::SubsetKey(std::vector<int> ids) : vertices(std::move(ids)) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw Error("SubsetKey: negative id " + std::to_string(vertices[i]));
    if (i > 0 && vertices[i] <= vertices[i - 1])
      throw Error("SubsetKey: ids must be strictly increasing, got " + ids_str(vertices));
  }
}

std::string SubsetKey::str() const { return ids_str(vertices); }

Hypergraph::Hypergraph() : d_(std::make_shared<Data>()) {}

Hypergraph Hypergraph::build(int n, int r, const std::vector<std::vector<int>>& edges) {
  if (n < 0) throw Error("build: vertex count must be nonnegative");
  if (r < 1) throw Error("build: uniformity must be at least 1");

  auto d = std::make_shared<Data>();
  d->n = n;
  d->r = r;

  std::vector<std::vector<int>> normalized;
  normalized.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<int> e = edges[i];
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r)
      throw Error("build: edge #" + std::to_string(i) + " " + ids_str(e) + " has " +
                  std::to_string(e.size()) + " ids, expected " + std::to_string(r));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= n)
        throw Error("build: edge #" + std::to_string(i) + " " + ids_str(e) +
                    ": id " + std::to_string(e[j]) + " out of range [0," +
                    std::to_string(n) + ")");
      if (j > 0 && e[j] == e[j - 1])
        throw Error("build: edge #" + std::to_string(i) + " " + ids_str(edges[i]) +
                    " has a repeated vertex");
    }
    normalized.push_back(std::move(e));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  d->edges = std::move(normalized);

  d->bits.reserve(d->edges.size());
  d->incident.assign(n, {});
  d->packed = (r <= 8 && n <= 255);
  for (int id = 0; id < static_cast<int>(d->edges.size()); ++id) {
    const auto& e = d->edges[id];
    d->bits.push_back(Bitset::from(n, e));
    for (int v : e) d->incident[v].push_back(id);
    if (d->packed)
      d->packed_id.emplace(pack_edge(e), id);
    else
      d->map_id.emplace(e, id);
  }
  return Hypergraph(std::move(d));
}

const std::vector<int>& Hypergraph::edge(int id) const {
  if (id < 0 || id >= edge_count())
    throw Error("unknown edge id " + std::to_string(id));
  return d_->edges[id];
}

const Bitset& Hypergraph::edge_bits(int id) const {
  if (id < 0 || id >= edge_count())
    throw Error("unknown edge id " + std::to_string(id));
  return d_->bits[id];
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
  if (v < 0 || v >= d_->n) throw Error("vertex " + std::to_string(v) + " out of range");
  return d_->incident[v];
}

int Hypergraph::find_edge_id(const std::vector<int>& sorted_vertices) const {
  if (static_cast<int>(sorted_vertices.size()) != d_->r) return -1;
  if (d_->packed) {
    auto it = d_->packed_id.find(pack_edge(sorted_vertices));
    return it == d_->packed_id.end() ? -1 : it->second;
  }
  auto it = d_->map_id.find(sorted_vertices);
  return it == d_->map_id.end() ? -1 : it->second;
}

const std::map<std::vector<int>, std::vector<int>>& Hypergraph::Data::index_for(int size) const {
  std::lock_guard<std::mutex> lock(index_mu);
  auto it = subset_index.find(size);
  if (it != subset_index.end()) return it->second;

  auto& index = subset_index[size];
  std::vector<int> pick(size);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const auto& e = edges[id];
    // all size-subsets of e, lexicographically
    std::vector<int> sel(size);
    for (int i = 0; i < size; ++i) sel[i] = i;
    while (true) {
      for (int i = 0; i < size; ++i) pick[i] = e[sel[i]];
      index[pick].push_back(id);
      int i = size - 1;
      while (i >= 0 && sel[i] == r - size + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  return index;
}

long long Hypergraph::codegree(const SubsetKey& t) const {
  return static_cast<long long>(edges_containing(t).size());
}

const std::vector<int>& Hypergraph::edges_containing(const SubsetKey& t) const {
  static const std::vector<int> kEmpty;
  int size = static_cast<int>(t.size());
  if (size >= d_->r)
    throw Error("codegree: subset " + t.str() + " has size >= uniformity " +
                std::to_string(d_->r));
  for (int v : t.vertices)
    if (v >= d_->n) throw Error("codegree: id " + std::to_string(v) + " out of range");
  if (size == 1) {
    return d_->incident[t.vertices[0]];
  }
  const auto& index = d_->index_for(size);
  auto it = index.find(t.vertices);
  return it == index.end() ? kEmpty : it->second;
}

long long Hypergraph::union_size(const std::vector<int>& edge_ids) const {
  Bitset u(d_->n);
  for (int id : edge_ids) {
    if (id < 0 || id >= edge_count()) throw Error("unknown edge id " + std::to_string(id));
    u |= d_->bits[id];
  }
  return u.count();
}

ReindexedGraph Hypergraph::link(const SubsetKey& t) const {
  int size = static_cast<int>(t.size());
  if (size >= d_->r)
    throw Error("link: subset " + t.str() + " has size >= uniformity " + std::to_string(d_->r));
  for (int v : t.vertices)
    if (v >= d_->n) throw Error("link: id " + std::to_string(v) + " out of range");

  ReindexedGraph out;
  out.new_of_old.assign(d_->n, -1);
  Bitset tb = Bitset::from(d_->n, t.vertices);
  for (int v = 0; v < d_->n; ++v) {
    if (tb.test(v)) continue;
    out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(v);
  }

  std::vector<std::vector<int>> projected;
  for (int id = 0; id < edge_count(); ++id) {
    if (!tb.subset_of(d_->bits[id])) continue;
    std::vector<int> e;
    e.reserve(d_->r - size);
    for (int v : d_->edges[id])
      if (!tb.test(v)) e.push_back(out.new_of_old[v]);
    projected.push_back(std::move(e));
  }
  out.graph = build(d_->n - size, d_->r - size, projected);
  return out;
}

ReindexedGraph Hypergraph::delete_vertices(const std::vector<int>& xs) const {
  Bitset xb(d_->n);
  for (int v : xs) {
    if (v < 0 || v >= d_->n) throw Error("delete_vertices: id " + std::to_string(v) + " out of range");
    xb.set(v);
  }

  ReindexedGraph out;
  out.new_of_old.assign(d_->n, -1);
  for (int v = 0; v < d_->n; ++v) {
    if (xb.test(v)) continue;
    out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
    out.old_of_new.push_back(v);
  }

  std::vector<std::vector<int>> kept;
  for (int id = 0; id < edge_count(); ++id) {
    if (d_->bits[id].intersects(xb)) continue;
    std::vector<int> e;
    e.reserve(d_->r);
    for (int v : d_->edges[id]) e.push_back(out.new_of_old[v]);
    kept.push_back(std::move(e));
  }
  out.graph = build(static_cast<int>(out.old_of_new.size()), d_->r, kept);
  return out;
}

namespace {

// Splits a line into tokens separated by single spaces; rejects leading,
// trailing, or doubled separators so serialize stays a bijection.
std::vector<std::string> split_strict(const std::string& line, int line_no) {
  if (!line.empty() && line.back() == '\r')
    throw ParseError(line_no, "CR line ending; the format requires LF");
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (cur.empty()) throw ParseError(line_no, "malformed spacing");
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw ParseError(line_no, "malformed spacing");
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& tok, int line_no) {
  if (tok.empty()) throw ParseError(line_no, "empty number");
  for (std::size_t i = 0; i < tok.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(line_no, "not a nonnegative integer: '" + tok + "'");
  if (tok.size() > 18) throw ParseError(line_no, "number too large: '" + tok + "'");
  return std::stoll(tok);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  auto head = split_strict(line, 1);
  if (head.size() != 3) throw ParseError(1, "header must be 'n r m'");
  long long n = parse_int(head[0], 1);
  long long r = parse_int(head[1], 1);
  long long m = parse_int(head[2], 1);
  if (r < 1) throw ParseError(1, "uniformity must be at least 1");
  if (n > 1'000'000'000) throw ParseError(1, "vertex count too large");

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int line_no = static_cast<int>(i) + 2;
    if (!std::getline(in, line))
      throw ParseError(line_no, "missing edge line (" + std::to_string(m) + " declared)");
    auto toks = split_strict(line, line_no);
    if (static_cast<long long>(toks.size()) != r)
      throw ParseError(line_no, "expected " + std::to_string(r) + " ids, got " +
                       std::to_string(toks.size()));
    std::vector<int> e;
    e.reserve(toks.size());
    for (const auto& tok : toks) {
      long long v = parse_int(tok, line_no);
      if (v >= n)
        throw ParseError(line_no, "id " + std::to_string(v) + " out of range [0," +
                         std::to_string(n) + ")");
      if (!e.empty() && v <= e.back())
        throw ParseError(line_no, "ids must be strictly increasing");
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  int line_no = static_cast<int>(m) + 2;
  while (std::getline(in, line)) {
    if (!line.empty())
      throw ParseError(line_no, "trailing content after " + std::to_string(m) + " edges");
    ++line_no;
  }
  return Hypergraph::build(static_cast<int>(n), static_cast<int>(r), edges);
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.vertex_count()) + " " +
                    std::to_string(h.uniformity()) + " " +
                    std::to_string(h.edge_count()) + "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sparsehg
