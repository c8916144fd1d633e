#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satlab/constructions.hpp"
#include "satlab/edge_list.hpp"
#include "satlab/errors.hpp"
#include "satlab/experiments.hpp"
#include "satlab/gnp.hpp"
#include "satlab/hamming.hpp"
#include "satlab/pattern_props.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

namespace {

void emit(const Report& r, const std::string& path) {
  if (path.empty()) {
    std::cout << r.to_string();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path);
  out << r.to_string();
}

void add_params(CLI::App* app, Params& p) {
  app->add_option("--eps", p.eps, "epsilon");
  app->add_option("--gamma", p.gamma, "gamma");
  app->add_option("--L", p.L, "A2 size multiplier");
  app->add_option("--c-ind", p.c_ind, "inductive level constant");
  app->add_option("--delta", p.delta, "density probe exponent");
  app->add_option("--pool-exp", p.pool_exp, "ntriangle pool exponent");
  app->add_option("--n-min", p.n_min, "minimum host size");
  app->add_flag("--force", p.force, "skip the p-range guard");
  app->add_option("--verify-guard", p.verify_guard, "largest n verified exhaustively");
  app->add_option("--verify-samples", p.verify_samples, "samples for the sampled check");
}

std::string edge_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-host graph saturation constructions and verifiers"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out;
  std::size_t n = 0;
  double p = 0.5;
  std::string pattern, construction = "greedy", host_path, sub_path;
  Params params;
  bool diag = false;

  auto* gen = app.add_subcommand("gen", "sample G(n,p) and write it as an edge list");
  gen->add_option("--n", n, "vertices")->required();
  gen->add_option("--p", p, "edge probability")->required();

  auto* con = app.add_subcommand("construct", "build a saturated subgraph of G(n,p)");
  con->add_option("--construction", construction, "bipartite|ntriangle|inductive|star|multipartite|greedy")
      ->required();
  con->add_option("--pattern", pattern, "pattern spec")->required();
  con->add_option("--n", n, "vertices")->required();
  con->add_option("--p", p, "edge probability")->required();
  con->add_flag("--diag", diag, "append diag.* diagnostics");
  add_params(con, params);

  auto* ver = app.add_subcommand("verify", "check that SUB is PATTERN-saturated in HOST");
  ver->add_option("--host", host_path, "host edge list")->required();
  ver->add_option("--sub", sub_path, "subgraph edge list")->required();
  ver->add_option("--pattern", pattern, "pattern spec")->required();

  auto* sat = app.add_subcommand("sat-exact", "exact saturation number by subset search");
  std::size_t complete = 0;
  sat->add_option("--host", host_path, "host edge list");
  sat->add_option("--complete", complete, "use K_k as host");
  sat->add_option("--pattern", pattern, "pattern spec")->required();

  auto* props = app.add_subcommand("props", "pattern properties");
  props->add_option("--pattern", pattern, "pattern spec")->required();

  auto* sweep = app.add_subcommand("sweep", "run a construction over an (n, p, seed) grid and write CSV");
  ExperimentSpec spec;
  sweep->add_option("--construction", spec.construction, "construction")->required();
  sweep->add_option("--pattern", spec.pattern, "pattern spec")->required();
  sweep->add_option("--n", spec.ns, "host sizes")->required()->delimiter(',');
  sweep->add_option("--p", spec.ps, "edge probabilities")->required()->delimiter(',');
  sweep->add_option("--seeds", spec.seeds, "seeds")->delimiter(',');
  sweep->add_option("--threads", spec.threads, "parallel cells");
  add_params(sweep, spec.params);

  for (auto* sub : {gen, con, ver, sat, props, sweep}) {
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--out", out, "output path");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      DeferredGnp g(n, p, seed);
      g.expose_all();
      const Graph host = g.to_graph();
      if (out.empty())
        write_edge_list(host, std::cout);
      else
        write_edge_list_file(host, out);
      return 0;
    }
    if (con->parsed()) {
      const Pattern f = parse_pattern(pattern);
      params.seed = seed;
      DeferredGnp g(n, p, seed);
      auto res = run_construction(construction, f, g, params);
      Report r = res.report.to_report();
      r.set("n", n);
      r.set("p", p);
      r.set("seed", seed);
      r.set("pattern", pattern);
      if (diag) {
        r.set("diag.regime", to_string(classify_regime(p)));
        r.set("diag.regime_f", regime_function(p));
        if (construction == "star" || construction == "multipartite") {
          const auto a1 = res.report.info.get("a1");
          if (a1) {
            const std::size_t na1 = std::stoul(*a1);
            const std::size_t start = na1 + std::stoul(*res.report.info.get("a2")) +
                                      std::stoul(*res.report.info.get("a3"));
            Params lp = params;
            if (construction == "multipartite" && !lp.eps) lp.eps = kDefaultEpsMultipartite;
            const auto lay = sharp_layout(n, p, 2, lp);
            std::vector<Vertex> b1;
            const auto view = g.view();
            for (Vertex v = static_cast<Vertex>(start); v < n; ++v) {
              std::size_t d = 0;
              for (Vertex a = 0; a < na1; ++a) d += view.test(a, v);
              if (d >= lay.lo_z && d <= lay.hi_z) b1.push_back(v);
            }
            r.merge(phi_classes(view, VertexSet(b1), VertexSet::range(0, static_cast<Vertex>(na1))).to_report(),
                    "diag.phi.");
          }
        }
      }
      std::cout << r.to_string();
      if (!out.empty()) write_edge_list_file(res.h, out);
      return 0;
    }
    if (ver->parsed()) {
      const Graph host = read_edge_list_file(host_path);
      const Graph h = read_edge_list_file(sub_path);
      if (host.vertex_count() != h.vertex_count())
        throw ContainmentError("host and subgraph have different vertex counts");
      const Family fam = Family::single(parse_pattern(pattern));
      const auto v = is_saturated(host, h, fam);
      Report r;
      r.set("saturated", v.saturated);
      r.set("free", v.free);
      r.set("uncompleted", v.uncompleted);
      if (v.copy) {
        std::string s;
        for (std::size_t i = 0; i < v.copy->size(); ++i) s += (i ? " " : "") + std::to_string((*v.copy)[i]);
        r.set("violation", "copy");
        r.set("copy", s);
      } else if (v.non_completing) {
        r.set("violation", "non_completing");
        r.set("edge", edge_string(*v.non_completing));
      }
      emit(r, out);
      return v.saturated ? 0 : 1;
    }
    if (sat->parsed()) {
      Graph host;
      if (!host_path.empty())
        host = read_edge_list_file(host_path);
      else if (complete > 0)
        host = complete_graph(complete);
      else
        throw ParameterError("sat-exact needs --host or --complete");
      const Pattern f = parse_pattern(pattern);
      Report r;
      r.set("pattern", pattern);
      r.set("host_vertices", host.vertex_count());
      r.set("host_edges", host.edge_count());
      r.set("sat", exact_sat(host, f));
      emit(r, out);
      return 0;
    }
    if (props->parsed()) {
      const Pattern f = parse_pattern(pattern);
      Report r;
      r.set("pattern", pattern);
      r.set("vertices", f.vertex_count());
      r.set("edges", f.edge_count());
      r.set("chromatic_number", chromatic_number(f.graph()));
      r.set("max_colour_class", max_colour_class(f.graph()));
      r.set("automorphisms", f.automorphism_count());
      r.set("blocks", blocks(f.graph()).size());
      const auto nt = detect_ntriangle(f.graph());
      r.set("ntriangle", nt.has_value());
      if (nt) {
        std::string im;
        for (std::size_t i = 0; i < nt->i_max.size(); ++i) im += (i ? " " : "") + std::to_string(nt->i_max[i]);
        r.set("ntriangle.i_max", im);
        r.set("ntriangle.v", nt->v);
        r.set("ntriangle.s_star", nt->s_star);
      }
      const auto st = detect_star(f.graph());
      r.set("star", st.has_value());
      if (st) r.set("star.edge", edge_string(st->edge));
      try {
        const auto side = family_min_bipartite_side(Family::single(f));
        r.set("bipartite.ell", side.ell);
      } catch (const ApplicabilityError&) {
        r.set("bipartite.ell", "none");
      }
      const auto parts = multipartite_parts(f);
      r.set("complete_multipartite", !parts.empty());
      emit(r, out);
      return 0;
    }
    if (sweep->parsed()) {
      if (spec.seeds.empty()) spec.seeds.push_back(seed);
      spec.out = out;
      const auto rows = run_sweep(spec);
      if (out.empty())
        write_csv(rows, std::cout);
      else
        write_csv_file(rows, out);
      for (const auto& row : rows)
        if (!row.error.empty())
          std::cerr << "n=" << row.n << " p=" << row.p << " seed=" << row.seed << ": " << row.verified << ": "
                    << row.error << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
