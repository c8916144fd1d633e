#include "satlab/saturation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>

#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"

namespace satlab {

void check_subgraph(BitMatrixView g, const Graph& h) {
  if (g.n != h.vertex_count()) throw ContainmentError("host and subgraph differ in vertex count");
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v : h.neighbors(u))
      if (!g.test(u, v))
        throw ContainmentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} is not a host edge");
}

SaturationVerdict is_saturated(BitMatrixView g, const Graph& h, const Family& fam) {
  check_subgraph(g, h);
  SaturationVerdict out;
  auto fr = is_family_free(h, fam);
  out.free = fr.free;
  if (!fr.free) {
    out.member = fr.member;
    out.copy = std::move(fr.embedding);
  }
  auto bad = uncompleted_pairs(g, h, fam);
  out.uncompleted = bad.size();
  if (!bad.empty()) out.non_completing = bad.front();
  out.saturated = out.free && bad.empty();
  return out;
}

SaturationVerdict is_saturated(const Graph& g, const Graph& h, const Family& fam) {
  return is_saturated(g.view(), h, fam);
}

SaturationVerdict sampled_saturation_check(BitMatrixView g, const Graph& h, const Family& fam,
                                           std::size_t samples, std::uint64_t seed) {
  check_subgraph(g, h);
  SaturationVerdict out;
  out.free = true;
  std::mt19937_64 rng(seed);
  const auto hedges = h.edges();
  if (!hedges.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, hedges.size() - 1);
    for (std::size_t t = 0; t < samples && out.free; ++t) {
      const Edge e = hedges[pick(rng)];
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (auto emb = copy_through_edge(h, e, fam[i])) {
          out.free = false;
          out.member = i;
          out.copy = std::move(*emb);
          break;
        }
    }
  }
  if (g.n >= 2) {
    std::uniform_int_distribution<Vertex> pv(0, static_cast<Vertex>(g.n - 1));
    std::size_t tried = 0, attempts = 0;
    while (tried < samples && attempts < samples * 1000) {
      ++attempts;
      Vertex u = pv(rng), v = pv(rng);
      if (u == v || !g.test(u, v) || h.adjacent(u, v)) continue;
      ++tried;
      if (!completes_unchecked(h, make_edge(u, v), fam)) {
        ++out.uncompleted;
        if (!out.non_completing) out.non_completing = make_edge(u, v);
      }
    }
  }
  out.saturated = out.free && out.uncompleted == 0;
  return out;
}

Graph greedy_saturate(const Graph& g, const Family& fam, std::uint64_t seed) {
  auto es = g.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(es.begin(), es.end(), rng);
  Graph h(g.vertex_count());
  for (const auto& e : es)
    if (!completes_unchecked(h, e, fam)) h.add_edge(e.u, e.v);
  return h;
}

PatchResult patch_up_unchecked(BitMatrixView g, Graph& h, const Family& fam) {
  PatchResult r;
  const auto cand = uncompleted_pairs(g, h, fam);
  r.uncompleted_before = cand.size();
  // Completion is monotone in h, so pairs completed now stay completed and
  // only the candidates need a second look.
  for (const auto& e : cand)
    if (!completes_unchecked(h, e, fam)) {
      h.add_edge(e.u, e.v);
      ++r.added;
    }
  return r;
}

PatchResult patch_up(BitMatrixView g, Graph& h, const Family& fam) {
  check_subgraph(g, h);
  if (!is_family_free(h, fam).free) throw PreconditionError("patch_up input is not family-free");
  return patch_up_unchecked(g, h, fam);
}

PatchResult patch_up(const Graph& g, Graph& h, const Family& fam) { return patch_up(g.view(), h, fam); }

PatchResult patch_up_serial(BitMatrixView g, Graph& h, const Family& fam) {
  PatchResult r;
  r.uncompleted_before = uncompleted_pairs_serial(g, h, fam).size();
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.test(u, v) && !h.adjacent(u, v) && !completes_unchecked(h, {u, v}, fam)) {
        h.add_edge(u, v);
        ++r.added;
      }
  return r;
}

std::size_t add_noncompleting(BitMatrixView g, Graph& h, const Family& fam,
                              const std::vector<Edge>& pairs) {
  std::size_t added = 0;
  for (const auto& e : pairs)
    if (g.test(e.u, e.v) && !h.adjacent(e.u, e.v) && !completes_unchecked(h, e, fam)) {
      h.add_edge(e.u, e.v);
      ++added;
    }
  return added;
}

namespace {

// Small self-contained containment test on at most 64 host vertices, kept
// separate from the main embedder so the exhaustive oracle does not share code
// with what it checks.
struct TinyHost {
  std::size_t n = 0;
  std::array<std::uint64_t, 64> adj{};
};

struct TinyPattern {
  std::size_t k = 0;
  std::vector<Vertex> order;
  std::vector<std::uint32_t> back;  // earlier-ordered neighbours, by position
};

TinyPattern tiny_pattern(const Graph& f) {
  TinyPattern t;
  t.k = f.vertex_count();
  std::vector<bool> seen(t.k, false);
  for (Vertex s = 0; s < t.k; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> q{s};
    seen[s] = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      t.order.push_back(q[i]);
      for (Vertex w : f.neighbors(q[i]))
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
  }
  std::vector<std::size_t> pos(t.k);
  for (std::size_t i = 0; i < t.k; ++i) pos[t.order[i]] = i;
  t.back.assign(t.k, 0);
  for (std::size_t i = 0; i < t.k; ++i)
    for (Vertex w : f.neighbors(t.order[i]))
      if (pos[w] < i) t.back[i] |= 1u << pos[w];
  return t;
}

bool tiny_contains(const TinyHost& h, const TinyPattern& p) {
  if (p.k > h.n) return false;
  std::array<int, 16> map{};
  const std::uint64_t all = h.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n) - 1;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> bool {
    if (i == p.k) return true;
    std::uint64_t cand = all & ~used;
    for (std::uint32_t m = p.back[i]; m; m &= m - 1) cand &= h.adj[map[std::countr_zero(m)]];
    while (cand) {
      const int c = std::countr_zero(cand);
      cand &= cand - 1;
      map[i] = c;
      if (self(self, i + 1, used | (std::uint64_t{1} << c))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

std::size_t exact_sat(const Graph& g, const Pattern& f) {
  const auto es = g.edges();
  if (es.size() > kExactSatMaxEdges)
    throw SizeError("exact_sat supports at most " + std::to_string(kExactSatMaxEdges) + " host edges");
  std::vector<Vertex> idx(g.vertex_count(), 0);
  std::size_t hn = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) idx[v] = static_cast<Vertex>(hn++);
  const TinyPattern tp = tiny_pattern(f.graph());
  const std::size_t m = es.size();
  auto build = [&](std::uint32_t mask) {
    TinyHost t;
    t.n = hn;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        t.adj[idx[es[i].u]] |= std::uint64_t{1} << idx[es[i].v];
        t.adj[idx[es[i].v]] |= std::uint64_t{1} << idx[es[i].u];
      }
    return t;
  };
  for (std::size_t k = 0; k <= m; ++k) {
    std::uint32_t mask = k == 0 ? 0 : (1u << k) - 1;
    const std::uint32_t limit = 1u << m;
    while (mask < limit) {
      TinyHost t = build(mask);
      bool ok = !tiny_contains(t, tp);
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (mask >> i & 1u) continue;
        TinyHost t2 = build(mask | (1u << i));
        ok = tiny_contains(t2, tp);
      }
      if (ok) return k;
      if (k == 0) break;
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return m;
}

}  // namespace satlab
