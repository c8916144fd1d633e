#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

constexpr std::size_t kMaxPatternVertices = 12;

// Small forbidden graph with precomputed search data.
class Pattern {
 public:
  Pattern() = default;
  // User-facing constructor: at least one edge and no isolated vertices.
  static Pattern make(const Graph& g, std::string name);
  // Derived remainders such as F[V\I] may keep isolated vertices.
  static Pattern derived(const Graph& g, std::string name);

  const Graph& graph() const { return *g_; }
  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return g_->vertex_count(); }
  std::size_t edge_count() const { return g_->edge_count(); }
  std::uint32_t adj_mask(Vertex v) const { return masks_[v]; }
  std::size_t degree(Vertex v) const { return g_->degree(v); }
  std::size_t isolated_count() const { return isolated_; }
  // One ordered edge (a,b) per orbit of Aut(F) acting on ordered edges.
  const std::vector<std::array<Vertex, 2>>& anchor_reps() const { return reps_; }
  std::size_t automorphism_count() const { return aut_count_; }

 private:
  static Pattern build(const Graph& g, std::string name);

  std::shared_ptr<const Graph> g_;
  std::string name_;
  std::vector<std::uint32_t> masks_;
  std::size_t isolated_ = 0;
  std::vector<std::array<Vertex, 2>> reps_;
  std::size_t aut_count_ = 0;
};

// Non-empty list of pairwise non-isomorphic patterns.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<Pattern> members);
  static Family single(Pattern p) { return Family(std::vector<Pattern>{std::move(p)}); }

  const std::vector<Pattern>& members() const { return m_; }
  std::size_t size() const { return m_.size(); }
  const Pattern& operator[](std::size_t i) const { return m_[i]; }
  std::size_t max_vertices() const;
  std::string name() const;

 private:
  std::vector<Pattern> m_;
};

// Pattern catalog: K<k>, C<k>, P<k> (path on k vertices), S<k> (star with k
// leaves), M:a,b,... (complete multipartite), petersen, E:u-v,u-v,...
Pattern parse_pattern(const std::string& spec);

Graph complete_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph path_graph(std::size_t k);
Graph star_graph(std::size_t leaves);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
Graph petersen_graph();

bool isomorphic(const Pattern& a, const Pattern& b);

}  // namespace satlab
