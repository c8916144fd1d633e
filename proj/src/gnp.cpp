#include "satlab/gnp.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"

namespace satlab {

DeferredGnp::DeferredGnp(std::size_t n, double p, std::uint64_t seed)
    : n_(n),
      p_(p),
      seed_(seed),
      words_(words_for(n)),
      stream_(seed, n),
      threshold_(presence_threshold(p)) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1], got " + std::to_string(p));
  exposed_.assign(n * words_, 0);
  present_.assign(n * words_, 0);
  rounds_.assign(n * words_, 0);
}

void DeferredGnp::check(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw RangeError("vertex out of range");
  if (u == v) throw SelfLoopError("self-loop pair {" + std::to_string(u) + "," + std::to_string(u) + "}");
}

void DeferredGnp::mark(std::vector<std::uint64_t>& m, Vertex u, Vertex v) {
  std::atomic_ref<std::uint64_t>(m[static_cast<std::size_t>(u) * words_ + (v >> 6)])
      .fetch_or(std::uint64_t{1} << (v & 63), std::memory_order_relaxed);
  std::atomic_ref<std::uint64_t>(m[static_cast<std::size_t>(v) * words_ + (u >> 6)])
      .fetch_or(std::uint64_t{1} << (u & 63), std::memory_order_relaxed);
}

bool DeferredGnp::get(const std::vector<std::uint64_t>& m, Vertex u, Vertex v) const {
  return (m[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

bool DeferredGnp::expose_pair(Vertex u, Vertex v) {
  check(u, v);
  if (get(rounds_, u, v))
    throw CouplingError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                        "} was already exposed in rounds");
  if (get(exposed_, u, v)) return get(present_, u, v);
  const bool x = pair_present(stream_, threshold_, u, v);
  if (x) mark(present_, u, v);
  mark(exposed_, u, v);
  return x;
}

std::vector<bool> round_indicators(const PairStream& s, Vertex u, Vertex v, bool present,
                                   std::uint32_t k, double q) {
  std::vector<bool> out(k, false);
  if (!present) return out;
  bool hit = false;
  for (std::uint32_t i = 0; i < k; ++i) {
    double prob = q;
    if (!hit) prob = q / (1.0 - std::pow(1.0 - q, static_cast<double>(k - i)));
    const bool b = i + 1 == k && !hit ? true : s.uniform(u, v, i + 1) < prob;
    out[i] = b;
    hit = hit || b;
  }
  return out;
}

std::vector<bool> DeferredGnp::expose_pair_rounds(Vertex u, Vertex v, std::uint32_t k, double q) {
  check(u, v);
  if (k == 0) throw ParameterError("round count must be positive");
  if (!(q > 0.0 && q < 1.0)) throw ParameterError("round probability must lie in (0,1)");
  if (std::abs(1.0 - std::pow(1.0 - q, static_cast<double>(k)) - p_) > 1e-9)
    throw ParameterError("rounds do not compose to p: 1-(1-q)^k != p");
  if (get(exposed_, u, v))
    throw CouplingError("pair {" + std::to_string(u) + "," + std::to_string(v) +
                        "} already exposed");
  const bool x = pair_present(stream_, threshold_, u, v);
  if (x) mark(present_, u, v);
  mark(rounds_, u, v);
  mark(exposed_, u, v);
  return round_indicators(stream_, u, v, x, k, q);
}

std::optional<bool> DeferredGnp::peek(Vertex u, Vertex v) const {
  check(u, v);
  if (!get(exposed_, u, v)) return std::nullopt;
  return get(present_, u, v);
}

bool DeferredGnp::exposed_by_rounds(Vertex u, Vertex v) const {
  check(u, v);
  return get(rounds_, u, v);
}

void DeferredGnp::expose_all() {
  if (fully_exposed_) return;
  fill_gnp_rows(stream_, threshold_, n_, exposed_.data(), present_.data());
  fully_exposed_ = true;
}

Graph DeferredGnp::to_graph() const {
  Graph g(n_);
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(view().row(u), [&](Vertex v) {
      if (v > u) g.add_edge(u, v);
    });
  return g;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  DeferredGnp g(n, p, seed);
  g.expose_all();
  return g.to_graph();
}

}  // namespace satlab
