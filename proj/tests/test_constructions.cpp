#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "satlab/constructions.hpp"
#include "satlab/embed.hpp"
#include "satlab/errors.hpp"
#include "satlab/gnp.hpp"
#include "satlab/params.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

namespace {

Family fam1(const std::string& s) { return Family::single(parse_pattern(s)); }

std::string info(const ConstructionResult& r, const std::string& key) {
  const auto v = r.report.info.get(key);
  return v ? *v : "<missing>";
}

void expect_saturated(const DeferredGnp& g, const ConstructionResult& r, const Family& fam) {
  EXPECT_TRUE(is_saturated(g.view(), r.h, fam).saturated);
  EXPECT_EQ(r.report.verified, "true");
}

void expect_accounting(const ConstructionResult& r) {
  EXPECT_EQ(r.report.phase_sum(), static_cast<std::int64_t>(r.report.edges_final));
  EXPECT_EQ(r.report.edges_final, r.h.edge_count());
  EXPECT_EQ(r.report.edges_final, r.report.edges_before_patch + r.report.patch_added);
  ASSERT_FALSE(r.report.phases.empty());
  EXPECT_EQ(r.report.phases.back().first, "patch");
  EXPECT_EQ(r.report.phases.back().second, static_cast<std::int64_t>(r.report.patch_added));
}

struct B1Setup {
  VertexSet a1, b1;
};

// A1 = first a1 vertices; B1 = vertices of B whose A1-degree is at least `min_deg`.
B1Setup expose_a1(DeferredGnp& g, std::size_t a1, std::size_t min_deg) {
  B1Setup s;
  s.a1 = VertexSet::range(0, static_cast<Vertex>(a1));
  std::vector<Vertex> b1;
  for (Vertex v = static_cast<Vertex>(a1); v < g.vertex_count(); ++v) {
    std::size_t d = 0;
    for (Vertex a : s.a1) d += g.expose_pair(a, v);
    if (d >= min_deg) b1.push_back(v);
  }
  s.b1 = VertexSet(b1);
  return s;
}

void check_hb1(DeferredGnp& g, const B1Setup& s, std::size_t s1, std::size_t s2, const HB1Result& r,
               bool direct) {
  EXPECT_LE(r.h.max_degree(), s2 - 1);
  const auto view = g.view();
  for (const auto& e : r.h.edges()) {
    EXPECT_TRUE(s.b1.contains(e.u) && s.b1.contains(e.v));
    EXPECT_TRUE(view.test(e.u, e.v));
    std::size_t co = 0;
    for (Vertex a : s.a1) co += view.test(a, e.u) && view.test(a, e.v);
    EXPECT_GE(co, r.codegree_threshold);
  }
  EXPECT_TRUE(is_family_free(r.h, fam1("C4")).free);
  if (direct) {
    const Graph k = complete_multipartite({s1, s2 - s1 + 1});
    EXPECT_TRUE(is_family_free(r.h, Family::single(Pattern::make(k, "K_s"))).free);
  }
}

}  // namespace

TEST(Bipartite, TauAndCap) {
  DeferredGnp g(1024, 0.5, 1);
  const auto r = construct_bipartite_family(g, fam1("C4"), Params{});
  EXPECT_EQ(info(r, "tau"), "6");
  EXPECT_EQ(info(r, "ell"), "2");
  EXPECT_EQ(info(r, "B_internal_cap"), "1");
  expect_accounting(r);
}

TEST(Bipartite, SaturatedAt2048) {
  DeferredGnp g(2048, 0.5, 3);
  const auto r = construct_bipartite_family(g, fam1("C4"), Params{});
  expect_saturated(g, r, fam1("C4"));
  EXPECT_LT(r.h.edge_count(), 10u * 2048u);
}

TEST(Bipartite, StarMemberUsesGreedy) {
  DeferredGnp g(200, 0.5, 2);
  const auto r = construct_bipartite_family(g, fam1("S3"), Params{});
  EXPECT_EQ(info(r, "ell"), "1");
  expect_saturated(g, r, fam1("S3"));
  EXPECT_LE(r.h.max_degree(), 3u);
}

TEST(Bipartite, Errors) {
  DeferredGnp g(200, 0.5, 2);
  EXPECT_THROW(construct_bipartite_family(g, fam1("K3"), Params{}), ApplicabilityError);
  Params p;
  p.n_min = 500;
  DeferredGnp g2(200, 0.5, 2);
  EXPECT_THROW(construct_bipartite_family(g2, fam1("C4"), p), SizeError);
}

TEST(NTriangle, C6At2048) {
  DeferredGnp g(2048, 0.5, 1);
  const auto r = construct_ntriangle(g, parse_pattern("C6"), Params{});
  expect_saturated(g, r, fam1("C6"));
  EXPECT_LE(static_cast<double>(r.h.edge_count()) / 2048.0, 12.0);
  expect_accounting(r);
}

TEST(NTriangle, C5Remainder) {
  DeferredGnp g(300, 0.5, 1);
  const auto r = construct_ntriangle(g, parse_pattern("C5"), Params{});
  EXPECT_EQ(info(r, "remainder_vertices"), "2");
  EXPECT_EQ(info(r, "remainder_edges"), "1");
  EXPECT_EQ(info(r, "witness_v"), "1");
  expect_saturated(g, r, fam1("C5"));
}

TEST(NTriangle, NotApplicable) {
  DeferredGnp g(100, 0.5, 1);
  EXPECT_THROW(construct_ntriangle(g, parse_pattern("K3"), Params{}), ApplicabilityError);
}

TEST(Inductive, K3At2048) {
  DeferredGnp g(2048, 0.5, 1);
  const auto r = construct_inductive(g, fam1("K3"), Params{});
  expect_saturated(g, r, fam1("K3"));
  EXPECT_EQ(info(r, "level0.chi"), "3");
  EXPECT_EQ(info(r, "level1.chi"), "2");
  expect_accounting(r);
}

TEST(Inductive, HatFamilyOfK3) {
  const Family hat = hat_family(fam1("K3"));
  std::set<std::string> sizes;
  for (const auto& m : hat.members())
    sizes.insert(std::to_string(m.vertex_count()) + "/" + std::to_string(m.edge_count()));
  EXPECT_EQ(sizes, (std::set<std::string>{"2/1", "3/3"}));
}

TEST(Inductive, BipartiteDelegates) {
  DeferredGnp g1(600, 0.5, 4), g2(600, 0.5, 4);
  const auto a = construct_inductive(g1, fam1("C4"), Params{});
  const auto b = construct_bipartite_family(g2, fam1("C4"), Params{});
  EXPECT_EQ(info(a, "delegated"), "bipartite");
  EXPECT_EQ(a.h.edges(), b.h.edges());
}

TEST(Inductive, K4At4096) {
  DeferredGnp g(4096, 0.5, 1);
  Params p;
  p.verify_guard = 0;
  p.verify_samples = 2000;
  const auto r = construct_inductive(g, fam1("K4"), p);
  EXPECT_LE(static_cast<double>(r.h.edge_count()), 8.0 * 4096.0 * std::log(4096.0));
  EXPECT_EQ(r.report.verified, "sampled");
}

TEST(Inductive, TooSmallIsSizeError) {
  DeferredGnp g(30, 0.5, 1);
  EXPECT_THROW(construct_inductive(g, fam1("K4"), Params{}), SizeError);
}

TEST(DenseFree, Examples) {
  Params p;
  const auto r = build_dense_free(complete_graph(20), fam1("K3"), parse_pattern("K2"), p, 1);
  EXPECT_TRUE(is_saturated(complete_graph(20), r.h, fam1("K3")).saturated);
  EXPECT_DOUBLE_EQ(density_probe(r.h, parse_pattern("K2"), 0.3, 50, 2).hit_fraction, 1.0);

  const auto e = build_dense_free(complete_graph(8), fam1("K2"), parse_pattern("K2"), p, 1);
  EXPECT_EQ(e.h.edge_count(), 0u);
  EXPECT_EQ(e.h.vertex_count(), 8u);

  // s=(1,2,2): forbidden {K3, K_{1,1}}, so the free subgraph is empty.
  const Graph ga = gen_gnp(150, 0.5, 2);
  const Family f122({parse_pattern("K3"), parse_pattern("M:1,1")});
  const auto d1 = build_dense_free(ga, f122, Pattern::derived(Graph(2), "K_{2}"), p, 3);
  EXPECT_TRUE(is_family_free(d1.h, f122).free);
  EXPECT_EQ(d1.h.edge_count(), 0u);
  // s=(2,2,2): forbidden {K3, K_{2,2}}, target K_{1,2}.
  const Family f222({parse_pattern("K3"), parse_pattern("C4")});
  const auto d2 = build_dense_free(ga, f222, parse_pattern("M:1,2"), p, 3);
  EXPECT_TRUE(is_family_free(d2.h, f222).free);
  EXPECT_TRUE(is_saturated(ga, d2.h, f222).saturated);
  EXPECT_GT(d2.h.edge_count(), 150u);
}

TEST(Ks2Factor, Examples) {
  auto f = ks2_factor(complete_graph(6), 3);
  ASSERT_EQ(f.packing.size(), 2u);
  EXPECT_TRUE(f.leftover.empty());
  std::set<Vertex> seen;
  for (const auto& c : f.packing) {
    EXPECT_EQ(c.size(), 3u);
    seen.insert(c.begin(), c.end());
  }
  EXPECT_EQ(seen.size(), 6u);

  f = ks2_factor(cycle_graph(5), 1);
  EXPECT_EQ(f.packing.size(), 5u);
  EXPECT_TRUE(f.leftover.empty());

  f = ks2_factor(cycle_graph(5), 3);
  EXPECT_TRUE(f.packing.empty());
  EXPECT_EQ(f.leftover.size(), 5u);
}

TEST(Ks2Factor, HostVariantPacksCliques) {
  const auto g = gen_gnp(200, 0.5, 6);
  std::vector<Vertex> verts;
  for (Vertex v = 50; v < 200; v += 2) verts.push_back(v);
  const auto f = ks2_factor(g.view(), verts, 3, nullptr);
  std::set<Vertex> seen;
  for (const auto& c : f.packing) {
    ASSERT_EQ(c.size(), 3u);
    for (Vertex x : c) {
      EXPECT_TRUE(seen.insert(x).second);
      for (Vertex y : c)
        if (x != y) EXPECT_TRUE(g.adjacent(x, y));
    }
  }
  for (Vertex x : f.leftover) EXPECT_TRUE(seen.insert(x).second);
  EXPECT_EQ(seen.size(), verts.size());
}

TEST(Dsatur, ProperColouring) {
  const auto g = gen_gnp(60, 0.5, 3);
  const auto cls = dsatur_colouring(g);
  std::size_t total = 0;
  for (const auto& c : cls) {
    total += c.size();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(g.adjacent(c[i], c[j]));
  }
  EXPECT_EQ(total, 60u);
  EXPECT_EQ(dsatur_colouring(complete_graph(5)).size(), 5u);
  EXPECT_EQ(dsatur_colouring(cycle_graph(6)).size(), 2u);
}

TEST(HB1, SingleRoundIsMatching) {
  DeferredGnp g(2048, 0.5, 1);
  const auto s = expose_a1(g, 24, 16);
  ASSERT_GT(s.b1.size(), 20u);
  const auto r = build_H_B1(g, s.b1, s.a1, 1, 2, Params{});
  EXPECT_EQ(r.rounds.size(), 1u);
  EXPECT_GT(r.h.edge_count(), 0u);
  check_hb1(g, s, 1, 2, r, true);
}

TEST(HB1, InvariantsTwoRounds) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    DeferredGnp g(2048, 0.5, seed);
    const auto s = expose_a1(g, 24, 15);
    const auto r = build_H_B1(g, s.b1, s.a1, 2, 3, Params{});
    EXPECT_EQ(r.rounds.size(), 2u);
    EXPECT_NEAR(std::stod(*r.report.get("round_probability")), 0.292893, 1e-5);
    EXPECT_GT(r.h.edge_count(), 0u);
    check_hb1(g, s, 2, 3, r, true);
    EXPECT_EQ(r.unmatched_per_round.size(), 2u);
  }
}

TEST(HB1, CouplingPreconditions) {
  DeferredGnp g(300, 0.5, 1);
  const auto a1 = VertexSet::range(0, 20);
  const VertexSet b1(std::vector<Vertex>{100, 101, 102});
  EXPECT_THROW(build_H_B1(g, b1, a1, 1, 2, Params{}), CouplingError);
  const auto s = expose_a1(g, 20, 0);
  g.expose_pair(100, 101);
  const VertexSet b1b(std::vector<Vertex>{100, 101, 102});
  EXPECT_THROW(build_H_B1(g, b1b, s.a1, 1, 2, Params{}), CouplingError);
}

TEST(Multipartite, FreeAndSaturatedSmall) {
  const Family fam = fam1("M:1,2,2");
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    for (std::size_t n : {60u, 120u}) {
      DeferredGnp g(n, 0.5, seed);
      const auto r = construct_multipartite(g, {1, 2, 2}, Params{});
      // Patch-up only adds non-completing edges, so the pre-patch graph is a
      // subgraph of a free graph.
      EXPECT_TRUE(is_family_free(r.h, fam).free);
      expect_saturated(g, r, fam);
      expect_accounting(r);
    }
}

TEST(Multipartite, N4096Seed11) {
  DeferredGnp g(4096, 0.5, 11);
  Params p;
  p.verify_guard = 0;
  p.verify_samples = 3000;
  const auto r = construct_multipartite(g, {1, 2, 2}, p);
  EXPECT_EQ(r.report.verified, "sampled");
  const auto v = sampled_saturation_check(g.view(), r.h, fam1("M:1,2,2"), 10000, 3);
  EXPECT_TRUE(v.free);
  EXPECT_TRUE(v.saturated);
  expect_accounting(r);
}

TEST(Multipartite, DelegatesCliques) {
  DeferredGnp g1(300, 0.5, 2), g2(300, 0.5, 2);
  const auto a = construct_multipartite(g1, {1, 1, 1}, Params{});
  const auto b = construct_star(g2, parse_pattern("K3"), Params{});
  EXPECT_EQ(info(a, "delegated"), "star");
  EXPECT_EQ(a.h.edges(), b.h.edges());
}

TEST(Multipartite, Errors) {
  DeferredGnp g(300, 0.4, 1);
  EXPECT_THROW(construct_multipartite(g, {1, 2, 2}, Params{}), RangeError);
  DeferredGnp g2(300, 0.5, 1);
  EXPECT_THROW(construct_multipartite(g2, {2, 2}, Params{}), ApplicabilityError);
  DeferredGnp g3(40, 0.5, 1);
  Params big;
  big.L = 2.0;
  EXPECT_THROW(construct_multipartite(g3, {1, 2, 2}, big), SizeError);
}

TEST(Multipartite, ForcedLowP) {
  DeferredGnp g(200, 0.4, 1);
  Params p;
  p.force = true;
  const auto r = construct_multipartite(g, {1, 2, 2}, p);
  expect_saturated(g, r, fam1("M:1,2,2"));
}

TEST(Layout, IntervalAtTwoToTheTwenty) {
  Params p;
  p.eps = 0.1;
  p.gamma = 0.05;
  const auto lay = sharp_layout(std::size_t{1} << 20, 0.5, 2, p);
  EXPECT_NEAR(lay.logr, 20.0, 1e-9);
  EXPECT_NEAR(lay.lo, 22.0, 1e-9);
  EXPECT_NEAR(lay.hi, 22.2, 1e-9);
  EXPECT_EQ(lay.lo_z, 22u);
  EXPECT_EQ(lay.hi_z, 23u);
}

TEST(Star, K3At4096) {
  DeferredGnp g(4096, 0.5, 1);
  Params p;
  p.verify_guard = 0;
  p.verify_samples = 3000;
  const auto r = construct_star(g, parse_pattern("K3"), p);
  const double ratio = static_cast<double>(r.h.edge_count()) / (4096.0 * 12.0);
  EXPECT_GE(ratio, 0.5);
  EXPECT_LE(ratio, 1.6);
  EXPECT_TRUE(sampled_saturation_check(g.view(), r.h, fam1("K3"), 10000, 1).saturated);
}

TEST(Star, K4Family) {
  const Family forb = star_forbidden_family(parse_pattern("K4"));
  std::set<std::size_t> sizes;
  for (const auto& m : forb.members()) sizes.insert(m.vertex_count());
  EXPECT_EQ(sizes, (std::set<std::size_t>{3, 4}));
  DeferredGnp g(400, 0.5, 1);
  const auto r = construct_star(g, parse_pattern("K4"), Params{});
  expect_saturated(g, r, fam1("K4"));
}

TEST(Star, NotApplicable) {
  DeferredGnp g(300, 0.5, 1);
  EXPECT_THROW(construct_star(g, parse_pattern("C4"), Params{}), ApplicabilityError);
}

TEST(Determinism, SameInputsSameEdges) {
  DeferredGnp a(500, 0.5, 9), b(500, 0.5, 9);
  EXPECT_EQ(construct_multipartite(a, {1, 2, 2}, Params{}).h.edges(),
            construct_multipartite(b, {1, 2, 2}, Params{}).h.edges());
  DeferredGnp c(500, 0.7, 9), d(500, 0.7, 9);
  EXPECT_EQ(construct_ntriangle(c, parse_pattern("C6"), Params{}).h.edges(),
            construct_ntriangle(d, parse_pattern("C6"), Params{}).h.edges());
  DeferredGnp e(500, 0.5, 9), f(500, 0.5, 9);
  EXPECT_EQ(construct_inductive(e, fam1("K3"), Params{}).h.edges(),
            construct_inductive(f, fam1("K3"), Params{}).h.edges());
}
