#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace satlab {

struct Params {
  std::optional<double> eps;    // default kDefaultEps, multipartite kDefaultEpsMultipartite
  std::optional<double> gamma;  // default min(0.05, 1/(32 s2))
  std::optional<double> L;      // a2 = L log_rho n
  std::optional<double> c_ind;  // |A| = C ln n per inductive level
  double delta = 0.3;           // density probes use subsets of n^-delta of the vertices
  double pool_exp = 0.5;        // ntriangle pool size n^pool_exp
  std::uint64_t seed = 1;
  std::optional<std::size_t> n_min;
  bool force = false;
  std::size_t probe_trials = 8;
  std::size_t verify_guard = 3000;
  std::size_t verify_samples = 10000;
};

constexpr double kDefaultEps = 0.1;
constexpr double kDefaultEpsMultipartite = 0.43;
constexpr double kDefaultL = 0.05;
constexpr double kDefaultCInd = 4.0;

inline double rho(double p) { return 1.0 / (1.0 - p); }
double log_rho(double n, double p);
double default_gamma(std::size_t s2);

// Sizes and thresholds shared by the multipartite and star constructions.
struct SharpLayout {
  double logr = 0;   // log_rho n
  double gamma = 0;
  double L = 0;
  std::size_t a1 = 0, a2 = 0, a3 = 0;
  double lo = 0, hi = 0;        // real interval I
  std::size_t lo_z = 0, hi_z = 0;  // integer hull used for A1-goodness
  std::size_t codegree_threshold = 0;
  std::size_t ball_threshold = 0;
};

SharpLayout sharp_layout(std::size_t n, double p, std::size_t s2, const Params& params);

}  // namespace satlab
