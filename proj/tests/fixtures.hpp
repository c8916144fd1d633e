#pragma once

#include <cstddef>
#include <vector>

#include "satlab/gnp.hpp"
#include "satlab/graph.hpp"
#include "satlab/params.hpp"

namespace fixture {

// The A1/B1 split used by the sharp constructions: A1 is the first a1
// vertices, B starts after a1+a2+a3, and B1 holds the A1-good vertices of B.
struct SharpSplit {
  satlab::SharpLayout lay;
  satlab::VertexSet a1, b, b1;
};

inline SharpSplit sharp_split(satlab::DeferredGnp& g, std::size_t s2, const satlab::Params& params) {
  using namespace satlab;
  SharpSplit s;
  const std::size_t n = g.vertex_count();
  s.lay = sharp_layout(n, g.p(), s2, params);
  s.a1 = VertexSet::range(0, static_cast<Vertex>(s.lay.a1));
  std::vector<Vertex> b, b1;
  for (auto v = static_cast<Vertex>(s.lay.a1 + s.lay.a2 + s.lay.a3); v < n; ++v) {
    std::size_t d = 0;
    for (Vertex a : s.a1) d += g.expose_pair(a, v);
    b.push_back(v);
    if (d >= s.lay.lo_z && d <= s.lay.hi_z) b1.push_back(v);
  }
  s.b = VertexSet(b);
  s.b1 = VertexSet(b1);
  return s;
}

}  // namespace fixture
