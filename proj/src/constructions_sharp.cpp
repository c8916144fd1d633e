#include <algorithm>
#include <cmath>
#include <numeric>

#include "construct_common.hpp"
#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"
#include "satlab/pattern_props.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

using namespace detail;

namespace {

struct SharpSpec {
  std::string name;
  Family fam;
  Family forbidden;
  Pattern target;
  std::size_t s1 = 1;
  std::size_t s2 = 1;
  bool b_internal = false;  // multipartite: H_B1 and the K_{s2}-factor on B2
};

std::vector<Vertex> iota_range(std::size_t lo, std::size_t hi) {
  std::vector<Vertex> v(hi - lo);
  std::iota(v.begin(), v.end(), static_cast<Vertex>(lo));
  return v;
}

void join_view(BitMatrixView view, Graph& h, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a)
    for (Vertex y : b)
      if (view.test(x, y)) h.add_edge(x, y);
}

DenseFreeResult dense_on(BitMatrixView view, Graph& h, const std::vector<Vertex>& vs, const SharpSpec& sp,
                         const Params& params, std::uint64_t salt) {
  auto res = build_dense_free(induced_from_host(view, vs), sp.forbidden, sp.target, params,
                              splitmix64(params.seed ^ salt));
  add_local(h, res.h, vs);
  return res;
}

ConstructionResult sharp_skeleton(DeferredGnp& g, const SharpSpec& sp, const Params& params) {
  const auto t0 = Clock::now();
  const std::size_t n = g.vertex_count();
  const SharpLayout lay = sharp_layout(n, g.p(), sp.s2, params);
  const std::size_t a1 = lay.a1, a2 = lay.a2, a3 = lay.a3;
  if (a1 == 0 || a2 == 0 || a3 == 0) throw SizeError(sp.name + ": derived sizes must be positive");
  if (2 * (a1 + a2 + a3) > n)
    throw SizeError(sp.name + ": a1+a2+a3=" + std::to_string(a1 + a2 + a3) + " exceeds n/2 for n=" +
                    std::to_string(n));
  check_n_min(n, 0, params, sp.name);

  ConstructionResult out{Graph(n), {}};
  auto& r = out.report;
  auto& h = out.h;
  r.construction = sp.name;
  PhaseTracker t(r, h);
  r.info.set("a1", a1);
  r.info.set("a2", a2);
  r.info.set("a3", a3);
  r.info.set("gamma", lay.gamma);
  r.info.set("L", lay.L);
  r.info.set("I.lo", lay.lo);
  r.info.set("I.hi", lay.hi);
  r.info.set("I.lo_int", lay.lo_z);
  r.info.set("I.hi_int", lay.hi_z);
  r.info.set("target", sp.target.name());
  r.info.set("forbidden", sp.forbidden.name());

  const auto A1 = iota_range(0, a1);
  const auto A2 = iota_range(a1, a1 + a2);
  const auto A3 = iota_range(a1 + a2, a1 + a2 + a3);
  const auto B = iota_range(a1 + a2 + a3, n);

  std::vector<Vertex> b1v, b2v;
  for (Vertex b : B) {
    std::size_t d = 0;
    for (Vertex a : A1) d += g.expose_pair(a, b);
    (d >= lay.lo_z && d <= lay.hi_z ? b1v : b2v).push_back(b);
  }
  r.info.set("B1.good", b1v.size());

  if (sp.b_internal && sp.s2 >= 2) {
    auto hb = build_H_B1(g, VertexSet(b1v), VertexSet(A1), sp.s1, sp.s2, params);
    r.info.merge(hb.report, "hb1.");
    // Peel vertices below degree s2-1, dropping their edges, until stable.
    Graph& hb1 = hb.h;
    std::vector<bool> moved(n, false);
    std::vector<Vertex> stack;
    for (Vertex b : b1v)
      if (hb1.degree(b) < sp.s2 - 1) {
        moved[b] = true;
        stack.push_back(b);
      }
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const auto nb = hb1.neighbors(v);
      const std::vector<Vertex> nbs(nb.begin(), nb.end());
      for (Vertex w : nbs) {
        hb1.remove_edge(v, w);
        if (!moved[w] && hb1.degree(w) < sp.s2 - 1) {
          moved[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::vector<Vertex> keep;
    std::size_t moved_count = 0;
    for (Vertex b : b1v) {
      if (moved[b]) {
        b2v.push_back(b);
        ++moved_count;
      } else {
        keep.push_back(b);
      }
    }
    b1v = std::move(keep);
    std::sort(b2v.begin(), b2v.end());
    for (const auto& e : hb1.edges()) h.add_edge(e.u, e.v);
    r.info.set("moved", moved_count);
    t.mark("H_B1");
  }
  r.info.set("B1", b1v.size());
  r.info.set("B2", b2v.size());

  g.expose_all();
  const auto view = g.view();

  const auto d1 = dense_on(view, h, A1, sp, params, 0xa1);
  if (d1.probed) r.info.set("probe.A1.hit", d1.probe.hit_fraction);
  t.mark("H_A1");
  join_view(view, h, A1, B);
  t.mark("A1_B");
  const auto d2 = dense_on(view, h, A2, sp, params, 0xa2);
  if (d2.probed) r.info.set("probe.A2.hit", d2.probe.hit_fraction);
  t.mark("H_A2");
  join_view(view, h, A2, b2v);
  t.mark("A2_B2");

  if (sp.b_internal && sp.s2 >= 2) {
    std::vector<Vertex> a12(A1);
    a12.insert(a12.end(), A2.begin(), A2.end());
    const auto points = neighbourhood_points(view, b2v, a12);
    const auto fac = ks2_factor(view, b2v, sp.s2, &points);
    for (const auto& c : fac.packing)
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) h.add_edge(c[i], c[j]);
    r.info.set("B2.factor_cliques", fac.packing.size());
    r.info.set("B2.factor_leftover", fac.leftover.size());
    if (!fac.leftover.empty())
      r.warnings.push_back(std::to_string(fac.leftover.size()) + " B2 vertices outside the K_s2-factor");
    t.mark("H_B2");
  }

  // A3: split into 2k parts, keep the k parts with the best dense-free probes.
  const auto colours = dsatur_colouring(induced_from_host(view, A2));
  const std::size_t k = colours.size();
  r.info.set("k", k);
  const std::size_t parts = 2 * k;
  std::vector<std::vector<Vertex>> a3p(parts);
  for (std::size_t i = 0; i < a3; ++i) a3p[i * parts / a3].push_back(A3[i]);
  std::vector<Graph> part_h(parts);
  std::vector<double> score(parts, -1.0);
  for (std::size_t i = 0; i < parts; ++i) {
    if (a3p[i].empty()) continue;
    auto res = build_dense_free(induced_from_host(view, a3p[i]), sp.forbidden, sp.target, params,
                                splitmix64(params.seed ^ (0xa300 + i)));
    score[i] = res.probed ? res.probe.hit_fraction : 0.0;
    part_h[i] = std::move(res.h);
  }
  std::vector<std::size_t> order(parts);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return score[x] > score[y]; });
  std::size_t selected = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = order[j];
    if (a3p[i].empty()) continue;
    ++selected;
    add_local(h, part_h[i], a3p[i]);
  }
  r.info.set("A3.selected", selected);
  if (selected < k) r.warnings.push_back("only " + std::to_string(selected) + " of " + std::to_string(k) + " A3 parts nonempty");
  t.mark("H_A3");
  join_view(view, h, A3, b1v);
  t.mark("A3_B1");
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = order[j];
    std::vector<Vertex> cls;
    for (Vertex c : colours[j]) cls.push_back(A2[c]);
    join_view(view, h, a3p[i], cls);
  }
  t.mark("A3_A2");

  Regions regions{std::vector<std::uint8_t>(n, 0), {"A1", "A2", "A3", "B1", "B2"}};
  for (Vertex v : A2) regions.of[v] = 1;
  for (Vertex v : A3) regions.of[v] = 2;
  for (Vertex v : b1v) regions.of[v] = 3;
  for (Vertex v : b2v) regions.of[v] = 4;
  finish(g, h, sp.fam, r, t, params, t0, &regions);
  return out;
}

Params with_gamma(const Params& params, std::size_t s_max) {
  Params p = params;
  if (!p.gamma) p.gamma = default_gamma(s_max);
  return p;
}

}  // namespace

ConstructionResult construct_star(DeferredGnp& g, const Pattern& f, const Params& params) {
  const auto wit = detect_star(f.graph());
  if (!wit) throw ApplicabilityError("pattern " + f.name() + " lacks property (*)");
  SharpSpec sp;
  sp.name = "star";
  sp.fam = Family::single(f);
  sp.forbidden = star_forbidden_family(f);
  sp.target = wit->remainder;
  const Params pr = with_gamma(params, max_colour_class(f.graph()));
  auto out = sharp_skeleton(g, sp, pr);
  out.report.info.set("witness_edge", std::to_string(wit->edge.u) + "-" + std::to_string(wit->edge.v));
  return out;
}

ConstructionResult construct_multipartite(DeferredGnp& g, std::vector<std::size_t> s, const Params& params) {
  std::sort(s.begin(), s.end());
  if (s.size() < 3) throw ApplicabilityError("multipartite construction needs at least 3 parts");
  if (s.front() == 0) throw ParameterError("part sizes must be positive");
  if (s.back() == 1) {
    auto out = construct_star(g, Pattern::make(complete_graph(s.size()), "K" + std::to_string(s.size())), params);
    out.report.construction = "multipartite";
    out.report.info.set("delegated", "star");
    return out;
  }
  if (!params.force && !(g.p() >= 0.5 && g.p() < 1.0))
    throw RangeError("multipartite construction needs p in [1/2, 1)");
  const std::size_t ell = s.size();
  std::string name = "M:";
  for (std::size_t i = 0; i < ell; ++i) name += (i ? "," : "") + std::to_string(s[i]);

  SharpSpec sp;
  sp.name = "multipartite";
  sp.fam = Family::single(Pattern::make(complete_multipartite(s), name));
  sp.s1 = s[0];
  sp.s2 = s[1];
  sp.b_internal = true;
  std::vector<Pattern> forb;
  forb.reserve(2);
  forb.push_back(Pattern::make(complete_graph(ell), "K" + std::to_string(ell)));
  forb.push_back(Pattern::make(complete_multipartite(std::vector<std::size_t>(ell - 1, s[0])),
                               "K_" + std::to_string(s[0]) + "^(" + std::to_string(ell - 1) + ")"));
  sp.forbidden = Family(std::move(forb));
  std::vector<std::size_t> tparts;
  if (s[0] > 1) tparts.push_back(s[0] - 1);
  for (std::size_t i = 2; i < ell; ++i) tparts.push_back(s[i]);
  std::string tname = "K_{";
  for (std::size_t i = 0; i < tparts.size(); ++i) tname += (i ? "," : "") + std::to_string(tparts[i]);
  sp.target = Pattern::derived(complete_multipartite(tparts), tname + "}");
  Params pr = with_gamma(params, s.back());
  if (!pr.eps) pr.eps = kDefaultEpsMultipartite;
  return sharp_skeleton(g, sp, pr);
}

}  // namespace satlab
