#include "satlab/hamming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "satlab/errors.hpp"
#include "satlab/kernels.hpp"

namespace satlab {

GWSample build_gw_sample(BitMatrixView g, double p, const VertexSet& b1, const VertexSet& a1,
                         std::size_t sample, std::uint64_t seed, const Params& params) {
  if (sample > b1.size()) throw ParameterError("sample larger than b1");
  std::vector<Vertex> pick(b1.vec());
  std::mt19937_64 rng(seed);
  std::shuffle(pick.begin(), pick.end(), rng);
  pick.resize(sample);
  std::sort(pick.begin(), pick.end());

  GWSample out;
  out.threshold = sharp_layout(g.n, p, 2, params).codegree_threshold;
  const auto pts = neighbourhood_points(g, pick, a1.vec());
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  for (std::size_t i = 0; i < pick.size(); ++i) {
    if (seen.contains(pts[i])) {
      ++out.duplicates;
      continue;
    }
    seen.emplace(pts[i], out.points.size());
    out.sources.push_back(pick[i]);
    out.points.push_back(pts[i]);
  }
  out.graph = Graph::from_edges(out.points.size(), codegree_pairs(out.points, out.threshold));
  return out;
}

Report BallCover::to_report() const {
  Report r;
  r.set("points", points);
  r.set("covered", covered);
  r.set("coverage", coverage);
  r.set("ball_threshold", ball_threshold);
  r.set("edge_threshold", edge_threshold);
  r.set("groups", groups);
  r.set("clique_checks", clique_checks);
  r.set("clique_passed", clique_passed);
  r.set("edges_covered", edges_covered);
  r.set("edge_bound", edge_bound);
  return r;
}

BallCover ball_cover_probe(BitMatrixView g, double p, const VertexSet& a1, const VertexSet& bprime,
                           const std::vector<Bitset>& points, const Params& params) {
  const SharpLayout lay = sharp_layout(g.n, p, 2, params);
  BallCover out;
  out.points = points.size();
  out.ball_threshold = lay.ball_threshold;
  out.edge_threshold = lay.codegree_threshold;
  const auto balls = neighbourhood_points(g, bprime.vec(), a1.vec());
  std::vector<std::vector<std::size_t>> groups(balls.size());
  std::vector<std::size_t> covered;
  for (std::size_t x = 0; x < points.size(); ++x) {
    for (std::size_t v = 0; v < balls.size(); ++v)
      if (balls[v].intersect_count(points[x]) >= lay.ball_threshold) {
        groups[v].push_back(x);
        covered.push_back(x);
        break;
      }
  }
  out.covered = covered.size();
  out.coverage = points.empty() ? 0.0 : static_cast<double>(covered.size()) / static_cast<double>(points.size());
  for (const auto& y : groups) {
    if (y.empty()) continue;
    ++out.groups;
    ++out.clique_checks;
    bool clique = true;
    for (std::size_t i = 0; i < y.size() && clique; ++i)
      for (std::size_t j = i + 1; j < y.size() && clique; ++j)
        clique = points[y[i]].intersect_count(points[y[j]]) >= lay.codegree_threshold;
    out.clique_passed += clique;
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    for (std::size_t j = i + 1; j < covered.size(); ++j)
      out.edges_covered += points[covered[i]].intersect_count(points[covered[j]]) >= lay.codegree_threshold;
  if (!bprime.empty())
    out.edge_bound = static_cast<double>(covered.size()) * static_cast<double>(covered.size()) /
                     (4.0 * static_cast<double>(bprime.size()));
  return out;
}

namespace {

// One greedy pass in random order followed by (1,2)-swaps until none applies.
std::vector<Vertex> greedy_with_swaps(const Graph& g, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> in(n, false);
  std::vector<std::size_t> tight(n, 0);  // neighbours inside the set
  auto insert = [&](Vertex v) {
    in[v] = true;
    for (Vertex w : g.neighbors(v)) ++tight[w];
  };
  auto erase = [&](Vertex v) {
    in[v] = false;
    for (Vertex w : g.neighbors(v)) --tight[w];
  };
  for (Vertex v : order)
    if (tight[v] == 0) insert(v);
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex x : order) {
      if (!in[x]) continue;
      // Candidates that are blocked only by x.
      std::vector<Vertex> c;
      for (Vertex w : g.neighbors(x))
        if (!in[w] && tight[w] == 1) c.push_back(w);
      for (std::size_t i = 0; i < c.size() && !improved; ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          if (!g.adjacent(c[i], c[j])) {
            erase(x);
            insert(c[i]);
            insert(c[j]);
            improved = true;
            break;
          }
      if (improved) break;
    }
  }
  for (Vertex v : order)
    if (!in[v] && tight[v] == 0) insert(v);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

IndependenceResult independence_probe(const Graph& g, std::size_t target, std::size_t effort,
                                      std::uint64_t seed) {
  IndependenceResult out;
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < std::max<std::size_t>(effort, 1); ++r) {
    auto s = greedy_with_swaps(g, rng);
    ++out.restarts;
    if (s.size() > out.best.size()) out.best = std::move(s);
    if (target > 0 && out.best.size() >= target) break;
  }
  out.reached_target = target > 0 && out.best.size() >= target;
  return out;
}

Report PhiClasses::to_report() const {
  Report r;
  r.set("classes", classes.size());
  std::size_t largest = 0;
  for (const auto& c : classes) largest = std::max(largest, c.size());
  r.set("largest_class", largest);
  r.set("regime", regime);
  for (const auto& [size, count] : histogram) r.set("size" + std::to_string(size), count);
  return r;
}

PhiClasses phi_classes(BitMatrixView g, const VertexSet& b1, const VertexSet& a1) {
  const auto pts = neighbourhood_points(g, b1.vec(), a1.vec());
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  PhiClasses out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [it, fresh] = index.emplace(pts[i], out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(b1[i]);
  }
  std::size_t smallest = SIZE_MAX, largest = 0;
  for (const auto& c : out.classes) {
    ++out.histogram[c.size()];
    smallest = std::min(smallest, c.size());
    largest = std::max(largest, c.size());
  }
  const double large = std::pow(static_cast<double>(std::max<std::size_t>(b1.size(), 1)), 0.25);
  if (out.classes.empty() || largest <= kBoundedClassSize)
    out.regime = "bounded";
  else if (smallest > kBoundedClassSize && static_cast<double>(smallest) >= large)
    out.regime = "polynomial";
  else
    out.regime = "mixed";
  return out;
}

double regime_function(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("classify_regime needs p in (0,1)");
  return 2.0 - std::log(p) / std::log1p(-p) - 1.0 / p;
}

Regime classify_regime(double p) {
  const double f = regime_function(p);
  if (std::abs(f) < 1e-9) return Regime::boundary;
  return f < 0 ? Regime::bounded : Regime::polynomial;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::bounded: return "bounded";
    case Regime::polynomial: return "polynomial";
    case Regime::boundary: return "boundary";
  }
  return "boundary";
}

}  // namespace satlab
