#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/embed.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

struct SaturationVerdict {
  bool saturated = false;
  bool free = false;
  std::size_t member = 0;             // family member of `copy`
  std::optional<Embedding> copy;      // witness that h is not free
  std::optional<Edge> non_completing; // first host edge whose addition completes nothing
  std::size_t uncompleted = 0;        // number of such edges
};

// Throws ContainmentError when h is not a subgraph of g.
void check_subgraph(BitMatrixView g, const Graph& h);

SaturationVerdict is_saturated(BitMatrixView g, const Graph& h, const Family& fam);
SaturationVerdict is_saturated(const Graph& g, const Graph& h, const Family& fam);

// Sampled check for hosts too large for a full search: `samples` random
// non-edges for maximality and `samples` random h-edges for copies through them.
SaturationVerdict sampled_saturation_check(BitMatrixView g, const Graph& h, const Family& fam,
                                           std::size_t samples, std::uint64_t seed);

Graph greedy_saturate(const Graph& g, const Family& fam, std::uint64_t seed);

struct PatchResult {
  std::size_t added = 0;
  std::size_t uncompleted_before = 0;
};

// Adds, in lexicographic order, every host edge whose addition completes no
// member. Requires h to be a fam-free subgraph of g.
PatchResult patch_up(BitMatrixView g, Graph& h, const Family& fam);
PatchResult patch_up(const Graph& g, Graph& h, const Family& fam);
// No precondition checks; constructions call this on graphs free by construction.
PatchResult patch_up_unchecked(BitMatrixView g, Graph& h, const Family& fam);
PatchResult patch_up_serial(BitMatrixView g, Graph& h, const Family& fam);

// Restricted patch-up over an explicit pair list, in the given order.
std::size_t add_noncompleting(BitMatrixView g, Graph& h, const Family& fam,
                              const std::vector<Edge>& pairs);

constexpr std::size_t kExactSatMaxEdges = 22;
// Minimum edge count of an f-saturated subgraph of g by exhaustive search.
std::size_t exact_sat(const Graph& g, const Pattern& f);

}  // namespace satlab
