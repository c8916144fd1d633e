#include "satlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <tuple>

#include <omp.h>

#include "satlab/errors.hpp"

namespace satlab {

namespace {

// RFC 4180 quoting; pattern specs such as M:1,2,2 contain commas.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

constexpr const char* kConstructions[] = {"bipartite", "ntriangle", "inductive", "star", "multipartite", "greedy"};

}  // namespace

bool is_known_construction(const std::string& name) {
  return std::find(std::begin(kConstructions), std::end(kConstructions), name) != std::end(kConstructions);
}

void ExperimentSpec::validate() const {
  if (ns.empty()) throw ParameterError("sweep needs at least one n");
  if (ps.empty()) throw ParameterError("sweep needs at least one p");
  if (seeds.empty()) throw ParameterError("sweep needs at least one seed");
  if (!is_known_construction(construction)) throw ParameterError("unknown construction: " + construction);
  if (pattern.empty()) throw ParameterError("sweep needs a pattern");
}

std::vector<std::size_t> multipartite_parts(const Pattern& f) {
  // Complete multipartite iff non-adjacency is an equivalence relation.
  const Graph& g = f.graph();
  const std::size_t k = g.vertex_count();
  std::vector<int> part(k, -1);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < k; ++v) {
    if (part[v] >= 0) continue;
    part[v] = static_cast<int>(sizes.size());
    std::size_t sz = 1;
    for (Vertex w = v + 1; w < k; ++w)
      if (!g.adjacent(v, w)) {
        if (part[w] >= 0) return {};
        part[w] = part[v];
        ++sz;
      }
    sizes.push_back(sz);
  }
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v)
      if ((part[u] == part[v]) == g.adjacent(u, v)) return {};
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ConstructionResult run_construction(const std::string& construction, const Pattern& f, DeferredGnp& g,
                                    const Params& params) {
  if (construction == "bipartite") return construct_bipartite_family(g, Family::single(f), params);
  if (construction == "ntriangle") return construct_ntriangle(g, f, params);
  if (construction == "inductive") return construct_inductive(g, Family::single(f), params);
  if (construction == "star") return construct_star(g, f, params);
  if (construction == "multipartite") {
    const auto parts = multipartite_parts(f);
    if (parts.empty()) throw ApplicabilityError("pattern " + f.name() + " is not complete multipartite");
    return construct_multipartite(g, parts, params);
  }
  if (construction == "greedy") return construct_greedy(g, Family::single(f), params);
  throw ParameterError("unknown construction: " + construction);
}

std::string error_tag(const std::exception& e) {
  if (dynamic_cast<const ApplicabilityError*>(&e)) return "error:applicability";
  if (dynamic_cast<const SizeError*>(&e)) return "error:size";
  if (dynamic_cast<const RangeError*>(&e)) return "error:range";
  if (dynamic_cast<const ParameterError*>(&e)) return "error:parameter";
  if (dynamic_cast<const ParseError*>(&e)) return "error:parse";
  if (dynamic_cast<const ConstructionFailure*>(&e)) return "error:construction";
  if (dynamic_cast<const CouplingError*>(&e)) return "error:coupling";
  if (dynamic_cast<const ContainmentError*>(&e)) return "error:containment";
  if (dynamic_cast<const PreconditionError*>(&e)) return "error:precondition";
  return "error:internal";
}

ResultRow run_cell(const std::string& construction, const std::string& pattern, std::size_t n, double p,
                   std::uint64_t seed, const Params& params) {
  ResultRow row;
  row.construction = construction;
  row.pattern = pattern;
  row.n = n;
  row.p = p;
  row.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Pattern f = parse_pattern(pattern);
    Params pr = params;
    pr.seed = seed;
    DeferredGnp g(n, p, seed);
    const auto res = run_construction(construction, f, g, pr);
    const auto& r = res.report;
    row.edges_before_patch = r.edges_before_patch;
    row.patch_added = r.patch_added;
    row.edges_final = r.edges_final;
    row.uncompleted_before_patch = r.uncompleted_before_patch;
    row.verified = r.verified;
    row.runtime_ms = r.runtime_ms;
  } catch (const std::exception& e) {
    row.verified = error_tag(e);
    row.error = e.what();
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return row;
}

std::vector<ResultRow> run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<std::tuple<std::size_t, double, std::uint64_t>> cells;
  for (auto n : spec.ns)
    for (auto p : spec.ps)
      for (auto s : spec.seeds) cells.emplace_back(n, p, s);
  std::sort(cells.begin(), cells.end());
  std::vector<ResultRow> rows(cells.size());
  const int threads = spec.threads > 0 ? spec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& [n, p, s] = cells[i];
    rows[i] = run_cell(spec.construction, spec.pattern, n, p, s, spec.params);
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.construction) << ',' << csv_field(r.pattern) << ',' << r.n << ',' << format_double(r.p) << ',' << r.seed << ','
        << r.edges_before_patch << ',' << r.patch_added << ',' << r.edges_final << ','
        << r.uncompleted_before_patch << ',' << r.verified << ',' << format_double(r.runtime_ms) << '\n';
  }
}

void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path + " for writing");
  write_csv(rows, out);
  if (!out) throw ParameterError("write failed: " + path);
}

}  // namespace satlab
