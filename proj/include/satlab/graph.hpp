#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "satlab/bitset.hpp"

namespace satlab {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted, duplicate-free list of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> v);
  static VertexSet range(Vertex lo, Vertex hi);

  bool contains(Vertex v) const;
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<Vertex>& vec() const { return v_; }
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> v_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    const Vertex r = adj_[u].size() >= adj_[v].size() ? u : v;
    const Vertex c = r == u ? v : u;
    return (bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  // Range-checked variant for external input.
  bool has_edge(Vertex u, Vertex v) const;

  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  BitMatrixView view() const { return {bits_.data(), n_, words_}; }

  std::vector<Edge> edges() const;
  Graph induced(std::span<const Vertex> vs) const;

 private:
  void check(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

// Vertices of `a` adjacent to every vertex of `s`.
VertexSet common_neighbors(const Graph& g, const VertexSet& s, const VertexSet& a);
VertexSet common_neighbors(BitMatrixView g, const VertexSet& s, const VertexSet& a);

std::size_t degree_into(BitMatrixView g, Vertex v, const Bitset& mask);

}  // namespace satlab
