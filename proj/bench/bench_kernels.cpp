#include <benchmark/benchmark.h>

#include <random>

#include "satlab/gnp.hpp"
#include "satlab/kernels.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

namespace {

template <bool Parallel>
void BM_GnpRows(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t w = words_for(n);
  const PairStream s(1, n);
  const auto t = presence_threshold(0.5);
  std::vector<std::uint64_t> exposed(n * w), present(n * w);
  for (auto _ : state) {
    std::fill(exposed.begin(), exposed.end(), 0);
    std::fill(present.begin(), present.end(), 0);
    if constexpr (Parallel)
      fill_gnp_rows(s, t, n, exposed.data(), present.data());
    else
      fill_gnp_rows_serial(s, t, n, exposed.data(), present.data());
    benchmark::DoNotOptimize(present.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}

template <bool Parallel>
void BM_UncompletedPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DeferredGnp g(n, 0.5, 3);
  g.expose_all();
  const Family fam = Family::single(parse_pattern("C4"));
  // A sparse free subgraph leaves most host edges to scan.
  Graph h(n);
  for (Vertex v = 1; v < n; ++v)
    if (g.view().test(0, v)) h.add_edge(0, v);
  for (auto _ : state) {
    auto r = Parallel ? uncompleted_pairs(g.view(), h, fam) : uncompleted_pairs_serial(g.view(), h, fam);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_CodegreePairs(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<Bitset> pts;
  for (std::size_t i = 0; i < m; ++i) {
    Bitset b(40);
    for (std::size_t j = 0; j < 40; ++j)
      if (rng() & 1) b.set(j);
    pts.push_back(b);
  }
  for (auto _ : state) {
    auto r = Parallel ? codegree_pairs(pts, 15) : codegree_pairs_serial(pts, 15);
    benchmark::DoNotOptimize(r.data());
  }
}

}  // namespace

BENCHMARK(BM_GnpRows<false>)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GnpRows<true>)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UncompletedPairs<false>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UncompletedPairs<true>)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodegreePairs<false>)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodegreePairs<true>)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
