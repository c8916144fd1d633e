#include "satlab/bitset.hpp"

namespace satlab {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

bool Bitset::any() const {
  for (auto x : w_)
    if (x) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

std::vector<Vertex> Bitset::members() const {
  std::vector<Vertex> out;
  for_each_bit(words(), [&](Vertex v) { out.push_back(v); });
  return out;
}

std::string Bitset::to_string() const {
  std::string s(bits_, '0');
  for (std::size_t i = 0; i < bits_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t BitsetHash::operator()(const Bitset& b) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ b.size();
  for (auto x : b.words()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace satlab
