#include "satlab/embed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "satlab/errors.hpp"

namespace satlab {

namespace {

// Backtracking subgraph search. The next pattern vertex is the one with the
// most already-mapped neighbours; ties go to the one whose cheapest mapped
// neighbour has the smallest host degree, then to higher pattern degree.
class Search {
 public:
  Search(const Graph& h, const Pattern& f, std::uint64_t limit)
      : h_(h), f_(f), k_(f.vertex_count()), limit_(limit) {
    for (Vertex x = 0; x < k_; ++x)
      if (f.degree(x) > 0) core_ |= 1u << x;
  }

  // Pre-map an ordered anchor; `extra` is 1 when the anchor edge is not in h.
  bool anchor(Vertex a, Vertex b, Vertex u, Vertex v, std::size_t extra) {
    if (h_.degree(u) + extra < f_.degree(a) || h_.degree(v) + extra < f_.degree(b)) return false;
    place(a, u);
    place(b, v);
    return true;
  }
  void reset() {
    mapped_ = 0;
    nused_ = 0;
  }

  bool run() { return rec(); }
  std::uint64_t count() const { return count_; }
  Embedding embedding() const { return found_; }

 private:
  void place(Vertex x, Vertex c) {
    map_[x] = c;
    mapped_ |= 1u << x;
    used_[nused_++] = c;
  }
  void unplace(Vertex x) {
    mapped_ &= ~(1u << x);
    --nused_;
  }
  bool is_used(Vertex c) const {
    for (int i = 0; i < nused_; ++i)
      if (used_[i] == c) return true;
    return false;
  }

  bool finish() {
    const std::size_t iso = f_.isolated_count();
    const std::size_t free_hosts = h_.vertex_count() - static_cast<std::size_t>(nused_);
    if (free_hosts < iso) return false;
    std::uint64_t ways = 1;
    for (std::size_t i = 0; i < iso; ++i) ways *= free_hosts - i;
    if (found_.empty()) {
      found_.assign(k_, 0);
      for (Vertex x = 0; x < k_; ++x)
        if (mapped_ >> x & 1u) found_[x] = map_[x];
      // Isolated pattern vertices take the smallest unused host vertices.
      Vertex c = 0;
      for (Vertex x = 0; x < k_; ++x) {
        if (mapped_ >> x & 1u) continue;
        while (is_used(c)) ++c;
        found_[x] = c++;
      }
    }
    count_ += ways;
    return count_ >= limit_;
  }

  bool rec() {
    if ((mapped_ & core_) == core_) return finish();

    Vertex x = 0;
    int best_cnt = -1;
    std::size_t best_est = 0;
    for (Vertex y = 0; y < k_; ++y) {
      if (!(core_ >> y & 1u) || (mapped_ >> y & 1u)) continue;
      const std::uint32_t mn = f_.adj_mask(y) & mapped_;
      const int cnt = std::popcount(mn);
      std::size_t est = h_.vertex_count();
      for (std::uint32_t m = mn; m; m &= m - 1) est = std::min(est, h_.degree(map_[std::countr_zero(m)]));
      const bool better = cnt > best_cnt || (cnt == best_cnt && est < best_est) ||
                          (cnt == best_cnt && est == best_est && f_.degree(y) > f_.degree(x));
      if (better) {
        x = y;
        best_cnt = cnt;
        best_est = est;
      }
    }

    const std::size_t need = f_.degree(x);
    const std::uint32_t mn = f_.adj_mask(x) & mapped_;
    if (mn == 0) {
      for (Vertex c = 0; c < h_.vertex_count(); ++c) {
        if (h_.degree(c) < need || is_used(c)) continue;
        place(x, c);
        const bool stop = rec();
        unplace(x);
        if (stop) return true;
      }
      return false;
    }

    Vertex pivot = 0;
    std::size_t pd = SIZE_MAX;
    for (std::uint32_t m = mn; m; m &= m - 1) {
      const Vertex y = static_cast<Vertex>(std::countr_zero(m));
      if (h_.degree(map_[y]) < pd) {
        pd = h_.degree(map_[y]);
        pivot = y;
      }
    }
    const std::uint32_t others = mn & ~(1u << pivot);
    for (Vertex c : h_.neighbors(map_[pivot])) {
      if (h_.degree(c) < need || is_used(c)) continue;
      bool ok = true;
      for (std::uint32_t m = others; m && ok; m &= m - 1)
        ok = h_.adjacent(c, map_[std::countr_zero(m)]);
      if (!ok) continue;
      place(x, c);
      const bool stop = rec();
      unplace(x);
      if (stop) return true;
    }
    return false;
  }

  const Graph& h_;
  const Pattern& f_;
  std::size_t k_;
  std::uint64_t limit_;
  std::uint32_t core_ = 0;
  std::uint32_t mapped_ = 0;
  std::array<Vertex, kMaxPatternVertices> map_{};
  std::array<Vertex, kMaxPatternVertices> used_{};
  int nused_ = 0;
  std::uint64_t count_ = 0;
  Embedding found_;
};

std::optional<Embedding> anchored(const Graph& h, Edge e, const Pattern& f, std::size_t extra) {
  Search s(h, f, 1);
  for (const auto& r : f.anchor_reps()) {
    s.reset();
    if (!s.anchor(r[0], r[1], e.u, e.v, extra)) continue;
    if (s.run()) return s.embedding();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> contains_copy(const Graph& h, const Pattern& f) {
  if (f.vertex_count() > h.vertex_count()) return std::nullopt;
  Search s(h, f, 1);
  if (s.run()) return s.embedding();
  return std::nullopt;
}

std::uint64_t count_embeddings(const Graph& h, const Pattern& f, std::uint64_t limit) {
  if (f.vertex_count() > h.vertex_count()) return 0;
  Search s(h, f, limit);
  s.run();
  return s.count();
}

FreenessResult is_family_free(const Graph& h, const Family& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (auto emb = contains_copy(h, fam[i])) return {false, i, std::move(*emb)};
  return {};
}

std::optional<Embedding> completing_copy(const Graph& h, Edge e, const Pattern& f) {
  if (h.has_edge(e.u, e.v)) throw ParameterError("edge already present in subgraph");
  return anchored(h, e, f, 1);
}

bool completes_unchecked(const Graph& h, Edge e, const Family& fam) {
  for (const auto& f : fam.members())
    if (anchored(h, e, f, 1)) return true;
  return false;
}

bool completes(const Graph& h, Edge e, const Family& fam) {
  if (h.has_edge(e.u, e.v)) throw ParameterError("edge already present in subgraph");
  return completes_unchecked(h, e, fam);
}

std::optional<Embedding> copy_through_edge(const Graph& h, Edge e, const Pattern& f) {
  if (!h.has_edge(e.u, e.v)) throw PreconditionError("edge not present in graph");
  return anchored(h, e, f, 0);
}

DensityProbe density_probe(const Graph& h, const Pattern& a, double eps, std::size_t trials,
                           std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("density probe eps must lie in (0,1]");
  const auto size = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(h.vertex_count())));
  if (size < a.vertex_count())
    throw ParameterError("density probe subsets smaller than the target pattern");
  DensityProbe out;
  out.trials = trials;
  out.subset_size = size;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> pool(h.vertex_count());
  std::iota(pool.begin(), pool.end(), 0);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
      std::swap(pool[i], pool[d(rng)]);
    }
    std::vector<Vertex> sub(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(sub.begin(), sub.end());
    if (contains_copy(h.induced(sub), a)) {
      ++hits;
    } else if (out.first_miss.empty()) {
      out.first_miss = sub;
    }
  }
  out.hit_fraction = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 1.0;
  return out;
}

}  // namespace satlab
