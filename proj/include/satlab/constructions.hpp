#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satlab/embed.hpp"
#include "satlab/gnp.hpp"
#include "satlab/graph.hpp"
#include "satlab/params.hpp"
#include "satlab/pattern.hpp"
#include "satlab/report.hpp"

namespace satlab {

ConstructionResult construct_bipartite_family(DeferredGnp& g, const Family& fam, const Params& params);
ConstructionResult construct_ntriangle(DeferredGnp& g, const Pattern& f, const Params& params);
ConstructionResult construct_inductive(DeferredGnp& g, const Family& fam, const Params& params);
ConstructionResult construct_star(DeferredGnp& g, const Pattern& f, const Params& params);
ConstructionResult construct_multipartite(DeferredGnp& g, std::vector<std::size_t> s, const Params& params);
// Seeded random-order greedy saturation of the whole host.
ConstructionResult construct_greedy(DeferredGnp& g, const Family& fam, const Params& params);

struct DenseFreeResult {
  Graph h;
  DensityProbe probe;
  bool probed = false;
};
// Maximal forbidden-free spanning subgraph of ga, greedy in seeded random
// order, with a density probe against `target`.
DenseFreeResult build_dense_free(const Graph& ga, const Family& forbidden, const Pattern& target,
                                 const Params& params, std::uint64_t seed);

struct HB1Result {
  Graph h;                         // on the full vertex set
  Report report;
  Graph gamma;                     // on positions of b1
  std::vector<Graph> rounds;       // Gamma_i, on positions of b1
  std::vector<std::size_t> unmatched_per_round;
  std::size_t codegree_threshold = 0;
};
HB1Result build_H_B1(DeferredGnp& g, const VertexSet& b1, const VertexSet& a1, std::size_t s1,
                     std::size_t s2, const Params& params);

struct Ks2Factor {
  std::vector<VertexSet> packing;
  VertexSet leftover;
};
Ks2Factor ks2_factor(const Graph& gb2, std::size_t s2);
// Packing of s2-cliques of host[verts]. With `points`, each clique grows by
// the candidate keeping the largest common point set (points indexed like verts).
Ks2Factor ks2_factor(BitMatrixView host, const std::vector<Vertex>& verts, std::size_t s2,
                     const std::vector<Bitset>* points);

// Saturation-degree greedy proper colouring; classes listed by colour.
std::vector<std::vector<Vertex>> dsatur_colouring(const Graph& g);

// Members of the star construction's forbidden family {F[V \ I]}.
Family star_forbidden_family(const Pattern& f);
// F-hat = {F \ I : F in fam, I independent}, isolated vertices dropped.
Family hat_family(const Family& fam);

}  // namespace satlab
