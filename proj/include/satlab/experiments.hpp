#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "satlab/constructions.hpp"
#include "satlab/params.hpp"

namespace satlab {

inline constexpr const char* kCsvHeader =
    "construction,pattern,n,p,seed,edges_before_patch,patch_added,edges_final,"
    "uncompleted_before_patch,verified,runtime_ms";

struct ExperimentSpec {
  std::string construction;
  std::string pattern;
  std::vector<double> ps;
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> seeds;
  Params params;
  std::string out;
  int threads = 0;  // 0: OpenMP default

  // Throws ParameterError on empty lists or an unknown construction.
  void validate() const;
};

struct ResultRow {
  std::string construction;
  std::string pattern;
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  std::size_t edges_before_patch = 0;
  std::size_t patch_added = 0;
  std::size_t edges_final = 0;
  std::size_t uncompleted_before_patch = 0;
  std::string verified;  // true, false, sampled, skipped or error:<kind>
  double runtime_ms = 0;
  std::string error;     // message when verified is error:<kind>
};

bool is_known_construction(const std::string& name);
// Part sizes of a complete multipartite pattern, ascending; empty if f is not one.
std::vector<std::size_t> multipartite_parts(const Pattern& f);

// Runs one construction on G(n,p) with the given seed.
ConstructionResult run_construction(const std::string& construction, const Pattern& f, DeferredGnp& g,
                                    const Params& params);

std::string error_tag(const std::exception& e);

ResultRow run_cell(const std::string& construction, const std::string& pattern, std::size_t n, double p,
                   std::uint64_t seed, const Params& params);
// One row per (n, p, seed), sorted by (n, p, seed); cells run in parallel.
std::vector<ResultRow> run_sweep(const ExperimentSpec& spec);

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace satlab
