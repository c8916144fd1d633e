#include <algorithm>
#include <cmath>
#include <numeric>

#include "satlab/constructions.hpp"
#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"
#include "satlab/pattern_props.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

DenseFreeResult build_dense_free(const Graph& ga, const Family& forbidden, const Pattern& target,
                                 const Params& params, std::uint64_t seed) {
  DenseFreeResult out;
  out.h = greedy_saturate(ga, forbidden, seed);
  const std::size_t n = ga.vertex_count();
  if (n == 0 || n < target.vertex_count() || params.probe_trials == 0) return out;
  double eps = std::pow(static_cast<double>(n), -params.delta);
  eps = std::max(eps, static_cast<double>(target.vertex_count()) / static_cast<double>(n));
  eps = std::min(eps, 1.0);
  out.probe = density_probe(out.h, target, eps, params.probe_trials, splitmix64(seed ^ 0xd3a5));
  out.probed = true;
  return out;
}

namespace {

// Grows a clique of free vertices from v, each step taking the candidate with
// the largest remaining common point set (or the first candidate without points).
// Returns the clique and its common point count.
std::pair<std::vector<Vertex>, std::size_t> grow_clique(BitMatrixView host, Vertex v, std::size_t s2,
                                                        const Bitset& free_mask,
                                                        const std::vector<std::size_t>& pos_of,
                                                        const std::vector<Bitset>* points) {
  std::vector<Vertex> clique{v};
  Bitset cand(host.n);
  auto cw = cand.words();
  auto fw = free_mask.words();
  auto rv = host.row(v);
  for (std::size_t w = 0; w < cw.size(); ++w) cw[w] = rv[w] & fw[w];
  Bitset common;
  if (points) common = (*points)[pos_of[v]];
  while (clique.size() < s2) {
    Vertex best = 0;
    std::size_t best_score = 0;
    bool found = false;
    for_each_bit(cand.words(), [&](Vertex c) {
      if (found && !points) return;
      const std::size_t sc = points ? common.intersect_count((*points)[pos_of[c]]) : 0;
      if (!found || sc > best_score) {
        best = c;
        best_score = sc;
        found = true;
      }
    });
    if (!found) break;
    clique.push_back(best);
    if (points) common &= (*points)[pos_of[best]];
    auto rb = host.row(best);
    for (std::size_t w = 0; w < cw.size(); ++w) cw[w] &= rb[w];
  }
  return {std::move(clique), points ? common.count() : 0};
}

}  // namespace

Ks2Factor ks2_factor(BitMatrixView host, const std::vector<Vertex>& verts, std::size_t s2,
                     const std::vector<Bitset>* points) {
  if (s2 == 0) throw ParameterError("s2 must be at least 1");
  Ks2Factor out;
  const std::size_t m = verts.size();
  std::vector<std::size_t> pos_of(host.n, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) pos_of[verts[i]] = i;
  Bitset free_mask(host.n);
  for (Vertex v : verts) free_mask.set(v);

  // With points, vertices with the fewest points choose first: the failure
  // mass of the factor is dominated by its poorest cliques.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (points)
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return (*points)[x].count() < (*points)[y].count();
    });
  for (std::size_t i : order) {
    const Vertex v = verts[i];
    if (!free_mask.test(v)) continue;
    auto clique = grow_clique(host, v, s2, free_mask, pos_of, points).first;
    if (clique.size() < s2) continue;
    for (Vertex x : clique) free_mask.reset(x);
    out.packing.emplace_back(std::move(clique));
  }
  std::vector<Vertex> leftover;
  for (Vertex v : verts)
    if (free_mask.test(v)) leftover.push_back(v);
  out.leftover = VertexSet(std::move(leftover));
  return out;
}

Ks2Factor ks2_factor(const Graph& gb2, std::size_t s2) {
  std::vector<Vertex> all(gb2.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return ks2_factor(gb2.view(), all, s2, nullptr);
}

std::vector<std::vector<Vertex>> dsatur_colouring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<Bitset> seen(n, Bitset(n + 1));
  std::vector<std::size_t> sat(n, 0);
  int used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick == n || sat[v] > sat[pick] || (sat[v] == sat[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    int c = 0;
    while (seen[pick].test(static_cast<std::size_t>(c))) ++c;
    colour[pick] = c;
    used = std::max(used, c + 1);
    for (Vertex w : g.neighbors(static_cast<Vertex>(pick)))
      if (!seen[w].test(static_cast<std::size_t>(c))) {
        seen[w].set(static_cast<std::size_t>(c));
        ++sat[w];
      }
  }
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(used));
  for (std::size_t v = 0; v < n; ++v) classes[static_cast<std::size_t>(colour[v])].push_back(static_cast<Vertex>(v));
  return classes;
}

HB1Result build_H_B1(DeferredGnp& g, const VertexSet& b1, const VertexSet& a1, std::size_t s1,
                     std::size_t s2, const Params& params) {
  if (s2 < 2) throw ParameterError("build_H_B1 needs s2 >= 2");
  if (s1 > s2) throw ParameterError("part sizes must satisfy s1 <= s2");
  for (Vertex b : b1)
    for (Vertex a : a1)
      if (!g.peek(a, b)) throw CouplingError("A1-B1 pair not exposed before build_H_B1");
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = i + 1; j < b1.size(); ++j)
      if (g.peek(b1[i], b1[j])) throw CouplingError("B1-internal pair exposed before build_H_B1");

  const std::size_t n = g.vertex_count();
  const double p = g.p();
  const SharpLayout lay = sharp_layout(n, p, s2, params);
  HB1Result out;
  out.codegree_threshold = lay.codegree_threshold;
  const std::size_t m = b1.size();

  const auto points = neighbourhood_points(g.view(), b1.vec(), a1.vec());
  const auto gamma_pairs = codegree_pairs(points, lay.codegree_threshold);
  out.gamma = Graph::from_edges(m, gamma_pairs);

  const auto k = static_cast<std::uint32_t>(s2 - 1);
  const double q = 1.0 - std::pow(1.0 - p, 1.0 / static_cast<double>(k));
  out.rounds.assign(k, Graph(m));
  for (const auto& e : gamma_pairs) {
    const auto ind = g.expose_pair_rounds(b1[e.u], b1[e.v], k, q);
    for (std::uint32_t r = 0; r < k; ++r)
      if (ind[r]) out.rounds[r].add_edge(e.u, e.v);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!out.gamma.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) g.expose_pair(b1[i], b1[j]);

  Graph uni(m);
  auto closes_c4 = [&](Vertex a, Vertex b) {
    for (Vertex x : uni.neighbors(a))
      for (Vertex y : uni.neighbors(x))
        if (y != a && y != b && uni.adjacent(y, b)) return true;
    return false;
  };
  for (std::uint32_t r = 0; r < k; ++r) {
    std::vector<bool> matched(m, false);
    std::size_t size = 0;
    for (const auto& e : out.rounds[r].edges()) {
      if (matched[e.u] || matched[e.v] || uni.adjacent(e.u, e.v) || closes_c4(e.u, e.v)) continue;
      uni.add_edge(e.u, e.v);
      matched[e.u] = matched[e.v] = true;
      ++size;
    }
    out.unmatched_per_round.push_back(m - 2 * size);
  }

  out.h = Graph(n);
  for (const auto& e : uni.edges()) out.h.add_edge(b1[e.u], b1[e.v]);
  std::size_t deficient = 0;
  for (Vertex i = 0; i < m; ++i) deficient += uni.degree(i) < s2 - 1;

  out.report.set("b1", m);
  out.report.set("codegree_threshold", lay.codegree_threshold);
  out.report.set("gamma_edges", gamma_pairs.size());
  out.report.set("rounds", k);
  out.report.set("round_probability", q);
  for (std::uint32_t r = 0; r < k; ++r) {
    out.report.set("round" + std::to_string(r + 1) + ".edges", out.rounds[r].edge_count());
    out.report.set("round" + std::to_string(r + 1) + ".unmatched", out.unmatched_per_round[r]);
  }
  out.report.set("edges", out.h.edge_count());
  out.report.set("deficient", deficient);
  return out;
}

namespace {

Graph drop_isolated(const Graph& f) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    if (f.degree(v) > 0) keep.push_back(v);
  return f.induced(keep);
}

}  // namespace

Family star_forbidden_family(const Pattern& f) {
  std::vector<Pattern> out;
  for (const auto& i : independent_sets(f.graph())) {
    Graph r = drop_isolated(remove_vertices(f.graph(), i));
    if (r.edge_count() == 0) continue;
    std::string name = f.name() + "-I{";
    for (std::size_t t = 0; t < i.size(); ++t) name += (t ? "," : "") + std::to_string(i[t]);
    out.push_back(Pattern::make(r, name + "}"));
  }
  return Family(std::move(out));
}

Family hat_family(const Family& fam) {
  std::vector<Pattern> out;
  for (const auto& f : fam.members())
    for (const auto& i : independent_sets(f.graph())) {
      Graph r = drop_isolated(remove_vertices(f.graph(), i));
      if (r.edge_count() == 0) throw ApplicabilityError("F-hat contains an edgeless member");
      std::string name = f.name() + "-I{";
      for (std::size_t t = 0; t < i.size(); ++t) name += (t ? "," : "") + std::to_string(i[t]);
      out.push_back(Pattern::make(r, name + "}"));
    }
  return Family(std::move(out));
}

}  // namespace satlab
