#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

using Colouring = std::vector<std::vector<Vertex>>;  // unlabelled colour classes

std::size_t chromatic_number(const Graph& f);
// All partitions of V(f) into chromatic_number(f) independent classes.
std::vector<Colouring> optimal_colourings(const Graph& f);

struct NTriangleWitness {
  std::vector<Vertex> i_max;
  Vertex v = 0;
  std::size_t s_star = 0;
  Colouring colouring;
};
// Largest colour class size over all optimal colourings.
std::size_t max_colour_class(const Graph& f);
std::optional<NTriangleWitness> detect_ntriangle(const Graph& f);

// Maximal two-vertex-connected subgraphs (a bridge counts as one).
std::vector<std::vector<Edge>> blocks(const Graph& b);
// Every block of b embeds into a.
bool is_degenerate(const Graph& b, const Pattern& a);

std::vector<std::vector<Vertex>> independent_sets(const Graph& f);

struct StarWitness {
  Edge edge;
  Pattern remainder;  // F[V \ {u,v}]
};
std::optional<StarWitness> detect_star(const Graph& f);

struct BipartiteSide {
  std::size_t ell = 0;
  std::size_t member = 0;
};
BipartiteSide family_min_bipartite_side(const Family& fam);

// F[V \ removed], relabelled in increasing vertex order.
Graph remove_vertices(const Graph& f, const std::vector<Vertex>& removed);

}  // namespace satlab
