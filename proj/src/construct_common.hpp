#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "satlab/constructions.hpp"

namespace satlab::detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Smallest t with (1 - pk)^t * n <= n^(2/5).
std::size_t tau_for(std::size_t n, double pk);

void check_n_min(std::size_t n, std::size_t needed, const Params& params, const std::string& what);

Graph induced_from_host(BitMatrixView g, const std::vector<Vertex>& vs);
void add_local(Graph& h, const Graph& local, const std::vector<Vertex>& vs);
// Host edges between every vertex of `a` and every vertex of `b`, exposed pair by pair.
void join_sets(DeferredGnp& g, Graph& h, const std::vector<Vertex>& a, const std::vector<Vertex>& b);
// add_noncompleting over all pairs inside vs, lexicographic.
std::size_t patch_within(BitMatrixView g, Graph& h, const Family& fam, const std::vector<Vertex>& vs);

void verify(BitMatrixView g, const Graph& h, const Family& fam, ConstructionReport& r, const Params& params);
// Vertex partition used to break uncompleted pairs down by region.
struct Regions {
  std::vector<std::uint8_t> of;
  std::vector<std::string> names;
};

// Expose everything, count uncompleted pairs, patch up, verify and time.
void finish(DeferredGnp& g, Graph& h, const Family& fam, ConstructionReport& r, PhaseTracker& t,
            const Params& params, Clock::time_point t0, const Regions* regions = nullptr);

// Bipartite-family construction on the vertex list `verts` (no final patch).
void bipartite_on(DeferredGnp& g, const std::vector<Vertex>& verts, const Family& fam,
                  const Params& params, Graph& h, ConstructionReport& r, PhaseTracker& t,
                  const std::string& tag);

}  // namespace satlab::detail
