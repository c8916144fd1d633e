#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

using Embedding = std::vector<Vertex>;  // pattern vertex -> host vertex

std::optional<Embedding> contains_copy(const Graph& h, const Pattern& f);

// Number of injective homomorphisms of f into h, stopping at `limit`.
std::uint64_t count_embeddings(const Graph& h, const Pattern& f, std::uint64_t limit = UINT64_MAX);

struct FreenessResult {
  bool free = true;
  std::size_t member = 0;
  Embedding embedding;
};

FreenessResult is_family_free(const Graph& h, const Family& fam);

// Copy of f in h+e that uses e. Requires e not in h.
std::optional<Embedding> completing_copy(const Graph& h, Edge e, const Pattern& f);
bool completes(const Graph& h, Edge e, const Family& fam);
// Same test without the precondition check; used in hot loops.
bool completes_unchecked(const Graph& h, Edge e, const Family& fam);

// Copy of f in h that uses the edge e of h.
std::optional<Embedding> copy_through_edge(const Graph& h, Edge e, const Pattern& f);

struct DensityProbe {
  double hit_fraction = 0.0;
  std::size_t trials = 0;
  std::size_t subset_size = 0;
  std::vector<Vertex> first_miss;
};

DensityProbe density_probe(const Graph& h, const Pattern& a, double eps, std::size_t trials,
                           std::uint64_t seed);

}  // namespace satlab
