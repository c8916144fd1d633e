#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/bitset.hpp"
#include "satlab/graph.hpp"

namespace satlab {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic per-pair randomness: draw k for the unordered pair {u,v}.
struct PairStream {
  std::uint64_t key = 0;

  PairStream(std::uint64_t seed, std::size_t n)
      : key(splitmix64(seed ^ splitmix64(0x5a17ab00ull + n))) {}

  std::uint64_t draw(Vertex u, Vertex v, std::uint32_t k) const {
    if (u > v) std::swap(u, v);
    const std::uint64_t pk = (static_cast<std::uint64_t>(u) << 32) | v;
    return splitmix64(splitmix64(key ^ pk) + 0xd1b54a32d192ed03ull * (k + 1));
  }
  // Uniform in [0,1) with 53 bits.
  double uniform(Vertex u, Vertex v, std::uint32_t k) const {
    return static_cast<double>(draw(u, v, k) >> 11) * 0x1.0p-53;
  }
};

inline std::uint64_t presence_threshold(double p) {
  if (p >= 1.0) return std::uint64_t{1} << 53;
  return static_cast<std::uint64_t>(p * 0x1.0p53);
}

inline bool pair_present(const PairStream& s, std::uint64_t threshold, Vertex u, Vertex v) {
  return (s.draw(u, v, 0) >> 11) < threshold;
}

// G(n,p) whose pairs are revealed on demand. The outcome of each pair is a
// fixed function of (seed, n, pair), so any exposure order yields the same graph.
class DeferredGnp {
 public:
  DeferredGnp(std::size_t n, double p, std::uint64_t seed);

  std::size_t vertex_count() const { return n_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  bool expose_pair(Vertex u, Vertex v);
  std::vector<bool> expose_pair_rounds(Vertex u, Vertex v, std::uint32_t k, double q);
  std::optional<bool> peek(Vertex u, Vertex v) const;
  bool exposed_by_rounds(Vertex u, Vertex v) const;

  // Reveal every pair; parallel over rows.
  void expose_all();
  bool fully_exposed() const { return fully_exposed_; }

  // Bit rows of revealed edges. Unrevealed pairs read as absent.
  BitMatrixView view() const { return {present_.data(), n_, words_}; }
  Graph to_graph() const;

  const PairStream& stream() const { return stream_; }
  std::uint64_t threshold() const { return threshold_; }

 private:
  void check(Vertex u, Vertex v) const;
  void mark(std::vector<std::uint64_t>& m, Vertex u, Vertex v);
  bool get(const std::vector<std::uint64_t>& m, Vertex u, Vertex v) const;

  std::size_t n_;
  double p_;
  std::uint64_t seed_;
  std::size_t words_;
  PairStream stream_;
  std::uint64_t threshold_;
  std::vector<std::uint64_t> exposed_;
  std::vector<std::uint64_t> present_;
  std::vector<std::uint64_t> rounds_;
  bool fully_exposed_ = false;
};

// Round indicators for a pair whose presence is `present`: iid Bernoulli(q)
// conditioned on their OR being `present`.
std::vector<bool> round_indicators(const PairStream& s, Vertex u, Vertex v, bool present,
                                   std::uint32_t k, double q);

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace satlab
