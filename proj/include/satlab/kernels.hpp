#pragma once

#include <cstdint>
#include <vector>

#include "satlab/bitset.hpp"
#include "satlab/gnp.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

// Row-parallel kernels and their serial references. Each pair of functions
// returns identical results; tests and bench/ compare them.
namespace satlab {

// Reveal every unrevealed pair of an n x n exposure/presence matrix pair.
void fill_gnp_rows(const PairStream& s, std::uint64_t threshold, std::size_t n,
                   std::uint64_t* exposed, std::uint64_t* present);
void fill_gnp_rows_serial(const PairStream& s, std::uint64_t threshold, std::size_t n,
                          std::uint64_t* exposed, std::uint64_t* present);

// Host edges outside h whose addition to h completes no member of fam,
// in lexicographic order.
std::vector<Edge> uncompleted_pairs(BitMatrixView host, const Graph& h, const Family& fam);
std::vector<Edge> uncompleted_pairs_serial(BitMatrixView host, const Graph& h, const Family& fam);

// Index pairs (i<j) whose point sets share at least `threshold` elements.
std::vector<Edge> codegree_pairs(const std::vector<Bitset>& points, std::size_t threshold);
std::vector<Edge> codegree_pairs_serial(const std::vector<Bitset>& points, std::size_t threshold);

// phi(v) = N(v) restricted to `a`, as a bitset over positions in `a`.
std::vector<Bitset> neighbourhood_points(BitMatrixView g, const std::vector<Vertex>& verts,
                                         const std::vector<Vertex>& a);

}  // namespace satlab
