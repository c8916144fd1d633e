#include "satlab/kernels.hpp"


#include "satlab/embed.hpp"

namespace satlab {

void fill_gnp_rows(const PairStream& s, std::uint64_t threshold, std::size_t n,
                   std::uint64_t* exposed, std::uint64_t* present) {
  const std::size_t words = words_for(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t ui = 0; ui < rows; ++ui) {
    const auto u = static_cast<Vertex>(ui);
    std::uint64_t* ex = exposed + u * words;
    std::uint64_t* pr = present + u * words;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = 0;
      const std::size_t hi = std::min<std::size_t>(64, n - w * 64);
      for (std::size_t b = 0; b < hi; ++b) {
        const auto v = static_cast<Vertex>(w * 64 + b);
        if (v == u || (ex[w] >> b & 1u)) continue;
        if (pair_present(s, threshold, u, v)) bits |= std::uint64_t{1} << b;
      }
      pr[w] |= bits;
      ex[w] = hi == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
      if (w == (u >> 6)) ex[w] &= ~(std::uint64_t{1} << (u & 63));
    }
  }
}

void fill_gnp_rows_serial(const PairStream& s, std::uint64_t threshold, std::size_t n,
                          std::uint64_t* exposed, std::uint64_t* present) {
  const std::size_t words = words_for(n);
  auto bit = [&](std::uint64_t* m, Vertex a, Vertex b) -> std::uint64_t& {
    return m[static_cast<std::size_t>(a) * words + (b >> 6)];
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t bu = std::uint64_t{1} << (v & 63), bv = std::uint64_t{1} << (u & 63);
      if (!(bit(exposed, u, v) & bu) && pair_present(s, threshold, u, v)) {
        bit(present, u, v) |= bu;
        bit(present, v, u) |= bv;
      }
      bit(exposed, u, v) |= bu;
      bit(exposed, v, u) |= bv;
    }
}

std::vector<Edge> uncompleted_pairs(BitMatrixView host, const Graph& h, const Family& fam) {
  const auto rows = static_cast<std::int64_t>(host.n);
  std::vector<std::vector<Edge>> per_row(host.n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ui = 0; ui < rows; ++ui) {
    const auto u = static_cast<Vertex>(ui);
    for_each_bit(host.row(u), [&](Vertex v) {
      if (v > u && !h.adjacent(u, v) && !completes_unchecked(h, {u, v}, fam))
        per_row[u].push_back({u, v});
    });
  }
  std::vector<Edge> out;
  for (auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Edge> uncompleted_pairs_serial(BitMatrixView host, const Graph& h, const Family& fam) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < host.n; ++u)
    for (Vertex v = u + 1; v < host.n; ++v)
      if (host.test(u, v) && !h.adjacent(u, v) && !completes_unchecked(h, {u, v}, fam))
        out.push_back({u, v});
  return out;
}

std::vector<Edge> codegree_pairs(const std::vector<Bitset>& points, std::size_t threshold) {
  const auto m = static_cast<std::int64_t>(points.size());
  std::vector<std::vector<Edge>> per_row(points.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j)
      if (points[i].intersect_count(points[j]) >= threshold)
        per_row[i].push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  std::vector<Edge> out;
  for (auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Edge> codegree_pairs_serial(const std::vector<Bitset>& points, std::size_t threshold) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      std::size_t c = 0;
      for (std::size_t t = 0; t < points[i].size(); ++t) c += points[i].test(t) && points[j].test(t);
      if (c >= threshold) out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  return out;
}

std::vector<Bitset> neighbourhood_points(BitMatrixView g, const std::vector<Vertex>& verts,
                                         const std::vector<Vertex>& a) {
  std::vector<Bitset> out(verts.size(), Bitset(a.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != verts[i] && g.test(verts[i], a[j])) out[i].set(j);
  return out;
}

}  // namespace satlab
