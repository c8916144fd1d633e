#include "satlab/params.hpp"

#include <algorithm>
#include <cmath>

#include "satlab/errors.hpp"

namespace satlab {

double log_rho(double n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("log_rho needs p in (0,1)");
  return std::log(n) / -std::log1p(-p);
}

double default_gamma(std::size_t s2) {
  return std::min(0.05, 1.0 / (32.0 * static_cast<double>(std::max<std::size_t>(s2, 1))));
}

SharpLayout sharp_layout(std::size_t n, double p, std::size_t s2, const Params& params) {
  const double eps = params.eps.value_or(kDefaultEps);
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  SharpLayout s;
  s.logr = log_rho(static_cast<double>(n), p);
  s.gamma = params.gamma.value_or(default_gamma(s2));
  if (!(s.gamma > 0.0)) throw ParameterError("gamma must be positive");
  s.L = params.L.value_or(kDefaultL);
  if (!(s.L > 0.0)) throw ParameterError("L must be positive");
  const double g = s.gamma;
  s.a1 = static_cast<std::size_t>(std::ceil((1.0 / p) * (1.0 + (1.0 + g) * eps) * s.logr));
  s.a2 = static_cast<std::size_t>(std::ceil(s.L * s.logr));
  const double la2 = std::log(static_cast<double>(std::max<std::size_t>(s.a2, 2)));
  s.a3 = static_cast<std::size_t>(std::ceil(static_cast<double>(s.a2) / std::sqrt(std::max(la2, 1.0))));
  s.lo = (1.0 + eps) * s.logr;
  s.hi = (1.0 + (1.0 + 2.0 * g) * eps) * s.logr;
  s.lo_z = static_cast<std::size_t>(std::floor(s.lo));
  s.hi_z = static_cast<std::size_t>(std::ceil(s.hi));
  s.codegree_threshold = static_cast<std::size_t>(std::ceil((1.0 + (1.0 - 6.0 * g) * eps) * s.logr));
  // Capped at lo_z so every A1-good vertex lies in its own ball, as it does for the real interval.
  s.ball_threshold = std::min(static_cast<std::size_t>(std::ceil((1.0 + (1.0 - g) * eps) * s.logr)), s.lo_z);
  return s;
}

}  // namespace satlab
