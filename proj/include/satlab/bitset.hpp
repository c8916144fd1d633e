#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace satlab {

using Vertex = std::uint32_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(std::span<const std::uint64_t> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

template <class F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t x = row[w];
    while (x) {
      f(static_cast<Vertex>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), w_(words_for(bits), 0) {}

  std::size_t size() const { return bits_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const;
  bool any() const;
  std::size_t intersect_count(const Bitset& o) const { return popcount_and(w_, o.w_); }
  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  bool operator==(const Bitset& o) const = default;
  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }
  std::vector<Vertex> members() const;
  std::string to_string() const;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const;
};

// Read-only view of a symmetric n x n bit matrix stored row by row.
struct BitMatrixView {
  const std::uint64_t* data = nullptr;
  std::size_t n = 0;
  std::size_t words = 0;

  std::span<const std::uint64_t> row(Vertex v) const {
    return {data + static_cast<std::size_t>(v) * words, words};
  }
  bool test(Vertex u, Vertex v) const {
    return (data[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
  }
};

}  // namespace satlab
