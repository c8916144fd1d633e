#include "satlab/graph.hpp"

#include <algorithm>
#include <string>

#include "satlab/errors.hpp"

namespace satlab {

VertexSet::VertexSet(std::vector<Vertex> v) : v_(std::move(v)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  VertexSet s;
  for (Vertex x = lo; x < hi; ++x) s.v_.push_back(x);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0), adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw RangeError("vertex out of range: " + std::to_string(std::max(u, v)) +
                     " >= " + std::to_string(n_));
  if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u, v);
  return adjacent(u, v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check(u, v);
  std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  const std::uint64_t bu = std::uint64_t{1} << (v & 63);
  if (wu & bu) return false;
  wu |= bu;
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  const std::uint64_t bu = std::uint64_t{1} << (v & 63);
  if (!(wu & bu)) return false;
  wu &= ~bu;
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  auto drop = [](std::vector<Vertex>& l, Vertex x) {
    l.erase(std::find(l.begin(), l.end(), x));
  };
  drop(adj_[u], v);
  drop(adj_[v], u);
  --m_;
  return true;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& l : adj_) d = std::max(d, l.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](Vertex v) {
      if (v > u) out.push_back({u, v});
    });
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  Graph h(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

VertexSet common_neighbors(BitMatrixView g, const VertexSet& s, const VertexSet& a) {
  if (s.empty()) throw ParameterError("common_neighbors needs a nonempty source set");
  for (const auto* set : {&s, &a})
    if (!set->empty() && set->vec().back() >= g.n) throw RangeError("vertex out of range in common_neighbors");
  std::vector<Vertex> out;
  for (Vertex x : a) {
    bool ok = true;
    for (Vertex y : s)
      if (x == y || !g.test(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s, const VertexSet& a) {
  return common_neighbors(g.view(), s, a);
}

std::size_t degree_into(BitMatrixView g, Vertex v, const Bitset& mask) {
  return popcount_and(g.row(v), mask.words());
}

}  // namespace satlab
