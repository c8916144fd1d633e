#include <algorithm>
#include <cmath>
#include <numeric>

#include "construct_common.hpp"
#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"
#include "satlab/pattern_props.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

namespace detail {

std::size_t tau_for(std::size_t n, double pk) {
  const double target = std::pow(static_cast<double>(n), 0.4) * (1.0 + 1e-12);
  double val = static_cast<double>(n);
  std::size_t t = 0;
  while (val > target) {
    val *= 1.0 - pk;
    ++t;
    if (t > 100000) throw ParameterError("tau does not converge; p too small");
  }
  return t;
}

void check_n_min(std::size_t n, std::size_t needed, const Params& params, const std::string& what) {
  const std::size_t lim = std::max(needed, params.n_min.value_or(0));
  if (n < lim)
    throw SizeError(what + ": n=" + std::to_string(n) + " below minimum " + std::to_string(lim));
}

Graph induced_from_host(BitMatrixView g, const std::vector<Vertex>& vs) {
  Graph out(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.test(vs[i], vs[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

void add_local(Graph& h, const Graph& local, const std::vector<Vertex>& vs) {
  for (const auto& e : local.edges()) h.add_edge(vs[e.u], vs[e.v]);
}

void join_sets(DeferredGnp& g, Graph& h, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a)
    for (Vertex y : b)
      if (x != y && g.expose_pair(x, y)) h.add_edge(x, y);
}

std::size_t patch_within(BitMatrixView g, Graph& h, const Family& fam, const std::vector<Vertex>& vs) {
  std::vector<Vertex> s(vs);
  std::sort(s.begin(), s.end());
  std::size_t added = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Vertex u = s[i], v = s[j];
      if (g.test(u, v) && !h.adjacent(u, v) && !completes_unchecked(h, {u, v}, fam)) {
        h.add_edge(u, v);
        ++added;
      }
    }
  return added;
}

void verify(BitMatrixView g, const Graph& h, const Family& fam, ConstructionReport& r, const Params& params) {
  if (h.vertex_count() <= params.verify_guard) {
    const auto v = is_saturated(g, h, fam);
    r.verified = v.saturated ? "true" : "false";
  } else {
    const auto v = sampled_saturation_check(g, h, fam, params.verify_samples, splitmix64(params.seed ^ 0x7e51));
    r.verified = v.saturated ? "sampled" : "false";
  }
}

void finish(DeferredGnp& g, Graph& h, const Family& fam, ConstructionReport& r, PhaseTracker& t,
            const Params& params, Clock::time_point t0, const Regions* regions) {
  g.expose_all();
  r.edges_before_patch = h.edge_count();
  const auto cand = uncompleted_pairs(g.view(), h, fam);
  if (regions) {
    const std::size_t k = regions->names.size();
    std::vector<std::size_t> counts(k * k, 0);
    for (const auto& e : cand) {
      auto a = regions->of[e.u], b = regions->of[e.v];
      if (a > b) std::swap(a, b);
      ++counts[a * k + b];
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b)
        if (counts[a * k + b] > 0)
          r.info.set("uncompleted." + regions->names[a] + "_" + regions->names[b], counts[a * k + b]);
  }
  r.uncompleted_before_patch = cand.size();
  r.patch_added = add_noncompleting(g.view(), h, fam, cand);
  t.mark("patch");
  r.edges_final = h.edge_count();
  verify(g.view(), h, fam, r, params);
  r.runtime_ms = ms_since(t0);
}

void bipartite_on(DeferredGnp& g, const std::vector<Vertex>& verts, const Family& fam,
                  const Params& params, Graph& h, ConstructionReport& r, PhaseTracker& t,
                  const std::string& tag) {
  const auto side = family_min_bipartite_side(fam);
  const std::size_t ell = side.ell;
  const std::size_t f0 = fam[side.member].vertex_count();
  r.info.set(tag + "ell", ell);
  r.info.set(tag + "F0", fam[side.member].name());
  if (ell == 1) {
    // A star is in the family: plain greedy saturation is already linear.
    g.expose_all();
    patch_within(g.view(), h, fam, verts);
    t.mark(tag + "star_greedy");
    return;
  }
  const std::size_t nn = verts.size();
  const double pk = std::pow(g.p(), static_cast<double>(ell - 1));
  const std::size_t tau = tau_for(nn, pk);
  r.info.set(tag + "tau", tau);
  check_n_min(nn, tau * (ell - 1) + 1, params, "bipartite construction");

  std::vector<std::vector<Vertex>> a(tau), b(tau);
  for (std::size_t i = 0; i < tau; ++i)
    for (std::size_t j = 0; j < ell - 1; ++j) a[i].push_back(verts[i * (ell - 1) + j]);
  std::vector<Vertex> rest(verts.begin() + static_cast<std::ptrdiff_t>(tau * (ell - 1)), verts.end());
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < tau; ++i) {
    for (Vertex x : rest) {
      if (owner[x] >= 0) continue;
      bool all = true;
      for (Vertex y : a[i]) all = g.expose_pair(x, y) && all;
      if (all) {
        owner[x] = static_cast<int>(i);
        b[i].push_back(x);
      }
    }
    for (Vertex y : a[i])
      for (Vertex x : b[i]) h.add_edge(x, y);
  }
  std::size_t bsum = 0;
  for (const auto& bi : b) bsum += bi.size();
  r.info.set(tag + "B_total", bsum);
  t.mark(tag + "A_B");

  g.expose_all();
  const auto view = g.view();
  // Reaching |F0| - ell neighbours inside B_i would complete K_{ell,|F0|-ell}.
  const std::size_t cap = f0 - ell - 1;
  r.info.set(tag + "B_internal_cap", cap);
  std::vector<std::size_t> inner(g.vertex_count(), 0);
  for (std::size_t i = 0; i < tau; ++i)
    for (std::size_t x = 0; x < b[i].size(); ++x)
      for (std::size_t y = x + 1; y < b[i].size(); ++y) {
        const Vertex u = b[i][x], v = b[i][y];
        if (!view.test(u, v) || inner[u] >= cap || inner[v] >= cap) continue;
        if (completes_unchecked(h, make_edge(u, v), fam)) continue;
        h.add_edge(u, v);
        ++inner[u];
        ++inner[v];
      }
  t.mark(tag + "B_internal");

  std::vector<Vertex> leftover;
  for (Vertex x : rest)
    if (owner[x] < 0) leftover.push_back(x);
  for (std::size_t i = 0; i < tau; ++i) {
    std::vector<Edge> pairs;
    for (Vertex x : rest) {
      if (owner[x] >= 0 && owner[x] <= static_cast<int>(i)) continue;
      for (Vertex y : b[i]) pairs.push_back(make_edge(x, y));
    }
    std::sort(pairs.begin(), pairs.end());
    add_noncompleting(view, h, fam, pairs);
  }
  t.mark(tag + "cross");
  patch_within(view, h, fam, leftover);
  r.info.set(tag + "leftover", leftover.size());
  t.mark(tag + "leftover");
}

// Induced copy of r among pool vertices not yet used.
std::optional<std::vector<Vertex>> find_induced(BitMatrixView g, const Graph& r,
                                                const std::vector<Vertex>& pool,
                                                std::vector<bool>& taken) {
  const std::size_t k = r.vertex_count();
  std::vector<Vertex> map(k);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (Vertex c : pool) {
      if (taken[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = map[j] != c && g.test(c, map[j]) == r.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (!ok) continue;
      map[i] = c;
      taken[c] = true;
      if (self(self, i + 1)) return true;
      taken[c] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace detail

using namespace detail;

ConstructionResult construct_bipartite_family(DeferredGnp& g, const Family& fam, const Params& params) {
  const auto t0 = Clock::now();
  family_min_bipartite_side(fam);
  ConstructionResult out{Graph(g.vertex_count()), {}};
  out.report.construction = "bipartite";
  PhaseTracker t(out.report, out.h);
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  bipartite_on(g, all, fam, params, out.h, out.report, t, "");
  finish(g, out.h, fam, out.report, t, params, t0);
  return out;
}

ConstructionResult construct_ntriangle(DeferredGnp& g, const Pattern& f, const Params& params) {
  const auto t0 = Clock::now();
  const auto wit = detect_ntriangle(f.graph());
  if (!wit) throw ApplicabilityError("pattern " + f.name() + " lacks property (>)");
  const Family fam = Family::single(f);
  const std::size_t n = g.vertex_count();
  ConstructionResult out{Graph(n), {}};
  auto& r = out.report;
  r.construction = "ntriangle";
  PhaseTracker t(r, out.h);

  std::vector<Vertex> removed = wit->i_max;
  removed.push_back(wit->v);
  const Graph rem = remove_vertices(f.graph(), removed);
  const std::size_t rk = rem.vertex_count();
  r.info.set("s_star", wit->s_star);
  r.info.set("witness_v", wit->v);
  r.info.set("remainder_vertices", rk);
  r.info.set("remainder_edges", rem.edge_count());

  if (rk == 0) {
    g.expose_all();
    t.mark("A_B");
    finish(g, out.h, fam, r, t, params, t0);
    return out;
  }

  const double pk = std::pow(g.p(), static_cast<double>(rk));
  const std::size_t tau = tau_for(n, pk);
  std::size_t pool_size = std::max<std::size_t>(
      static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), params.pool_exp))), 2 * tau * rk);
  pool_size = std::min(pool_size, n / 4);
  check_n_min(n, 4 * rk + 4, params, "ntriangle construction");
  r.info.set("tau", tau);
  r.info.set("pool", pool_size);

  g.expose_all();
  const auto view = g.view();
  std::vector<Vertex> pool(pool_size);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<bool> taken(n, false);
  std::vector<std::vector<Vertex>> a;
  while (a.size() < tau) {
    auto copy = find_induced(view, rem, pool, taken);
    if (!copy) break;
    a.push_back(std::move(*copy));
  }
  r.info.set("copies", a.size());
  if (a.empty()) throw ConstructionFailure("no induced copy of the remainder in the pool");
  if (a.size() < tau) r.warnings.push_back("pool exhausted after " + std::to_string(a.size()) + " copies");
  for (const auto& ai : a)
    for (const auto& e : rem.edges()) out.h.add_edge(ai[e.u], ai[e.v]);
  t.mark("A_internal");

  std::vector<int> owner(n, -1);
  std::vector<std::vector<Vertex>> b(a.size());
  std::vector<Vertex> rest;
  for (Vertex x = static_cast<Vertex>(pool_size); x < n; ++x) rest.push_back(x);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Vertex x : rest) {
      if (owner[x] >= 0) continue;
      bool all = true;
      for (Vertex y : a[i]) all = all && view.test(x, y);
      if (all) {
        owner[x] = static_cast<int>(i);
        b[i].push_back(x);
      }
    }
    for (Vertex y : a[i])
      for (Vertex x : b[i]) out.h.add_edge(x, y);
  }
  t.mark("A_B");

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Edge> pairs;
    for (std::size_t x = 0; x < b[i].size(); ++x)
      for (std::size_t y = x + 1; y < b[i].size(); ++y) pairs.push_back(make_edge(b[i][x], b[i][y]));
    std::sort(pairs.begin(), pairs.end());
    add_noncompleting(view, out.h, fam, pairs);
  }
  t.mark("B_internal");
  std::vector<Vertex> leftover;
  for (Vertex x : rest)
    if (owner[x] < 0) leftover.push_back(x);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Edge> pairs;
    for (Vertex x : rest) {
      if (owner[x] >= 0 && owner[x] <= static_cast<int>(i)) continue;
      for (Vertex y : b[i]) pairs.push_back(make_edge(x, y));
    }
    std::sort(pairs.begin(), pairs.end());
    add_noncompleting(view, out.h, fam, pairs);
  }
  t.mark("cross");
  patch_within(view, out.h, fam, leftover);
  r.info.set("leftover", leftover.size());
  t.mark("leftover");
  finish(g, out.h, fam, r, t, params, t0);
  return out;
}

namespace {

std::size_t family_chi(const Family& fam) {
  std::size_t chi = SIZE_MAX;
  for (const auto& f : fam.members()) chi = std::min(chi, chromatic_number(f.graph()));
  return chi;
}

void inductive_level(DeferredGnp& g, const std::vector<Vertex>& verts, const Family& fam,
                     const Params& params, Graph& h, ConstructionReport& r, PhaseTracker& t,
                     std::size_t depth) {
  const std::string tag = "level" + std::to_string(depth) + ".";
  const std::size_t chi = family_chi(fam);
  r.info.set(tag + "chi", chi);
  r.info.set(tag + "family_size", fam.size());
  if (chi <= 2) {
    bipartite_on(g, verts, fam, params, h, r, t, tag);
    patch_within(g.view(), h, fam, verts);
    t.mark(tag + "patch");
    return;
  }
  const double c = params.c_ind.value_or(kDefaultCInd);
  const auto asz = static_cast<std::size_t>(std::ceil(c * std::log(static_cast<double>(verts.size()))));
  if (2 * asz >= verts.size())
    throw SizeError("inductive construction: |A|=" + std::to_string(asz) + " too large for " +
                    std::to_string(verts.size()) + " vertices");
  r.info.set(tag + "A", asz);
  std::vector<Vertex> a(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(asz));
  std::vector<Vertex> rest(verts.begin() + static_cast<std::ptrdiff_t>(asz), verts.end());
  inductive_level(g, rest, hat_family(fam), params, h, r, t, depth + 1);
  join_sets(g, h, a, rest);
  t.mark(tag + "A_rest");
  if (depth > 0) {
    g.expose_all();
    patch_within(g.view(), h, fam, verts);
    t.mark(tag + "patch");
  }
}

}  // namespace

ConstructionResult construct_inductive(DeferredGnp& g, const Family& fam, const Params& params) {
  if (family_chi(fam) == 2) {
    auto out = construct_bipartite_family(g, fam, params);
    out.report.info.set("delegated", "bipartite");
    out.report.construction = "inductive";
    return out;
  }
  const auto t0 = Clock::now();
  const std::size_t n = g.vertex_count();
  ConstructionResult out{Graph(n), {}};
  out.report.construction = "inductive";
  PhaseTracker t(out.report, out.h);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  inductive_level(g, all, fam, params, out.h, out.report, t, 0);
  finish(g, out.h, fam, out.report, t, params, t0);
  return out;
}

ConstructionResult construct_greedy(DeferredGnp& g, const Family& fam, const Params& params) {
  const auto t0 = Clock::now();
  g.expose_all();
  const Graph host = g.to_graph();
  ConstructionResult out{greedy_saturate(host, fam, params.seed), {}};
  out.report.construction = "greedy";
  out.report.phases.emplace_back("greedy", static_cast<std::int64_t>(out.h.edge_count()));
  PhaseTracker t(out.report, out.h);
  finish(g, out.h, fam, out.report, t, params, t0);
  return out;
}

}  // namespace satlab
