#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satlab/bitset.hpp"
#include "satlab/graph.hpp"
#include "satlab/params.hpp"
#include "satlab/report.hpp"

namespace satlab {

// phi-images of sampled B1 vertices: A1-neighbourhoods as bitsets over positions in a1.
struct GWSample {
  std::vector<Vertex> sources;  // one representative B1 vertex per distinct point
  std::vector<Bitset> points;
  Graph graph;                  // |x cap y| >= threshold
  std::size_t threshold = 0;
  std::size_t duplicates = 0;   // sampled vertices whose point was already present
};

GWSample build_gw_sample(BitMatrixView g, double p, const VertexSet& b1, const VertexSet& a1,
                         std::size_t sample, std::uint64_t seed, const Params& params);

struct BallCover {
  std::size_t points = 0;
  std::size_t covered = 0;
  double coverage = 0.0;
  std::size_t ball_threshold = 0;
  std::size_t edge_threshold = 0;
  std::size_t groups = 0;          // nonempty Y_i
  std::size_t clique_checks = 0;   // nonempty Y_i tested
  std::size_t clique_passed = 0;
  std::size_t edges_covered = 0;   // G_W edges among covered points
  double edge_bound = 0.0;         // |J|^2 / (4 m') with m' = |bprime|
  Report to_report() const;
};

BallCover ball_cover_probe(BitMatrixView g, double p, const VertexSet& a1, const VertexSet& bprime,
                           const std::vector<Bitset>& points, const Params& params);

struct IndependenceResult {
  std::vector<Vertex> best;
  bool reached_target = false;
  std::size_t restarts = 0;
};

// Randomized greedy plus (1,2)-swap local search; returns the largest independent set seen.
IndependenceResult independence_probe(const Graph& g, std::size_t target, std::size_t effort,
                                      std::uint64_t seed);

struct PhiClasses {
  std::vector<std::vector<Vertex>> classes;  // ordered by smallest member
  std::map<std::size_t, std::size_t> histogram;  // class size -> count
  std::string regime;  // bounded, polynomial or mixed
  Report to_report() const;
};

// Class sizes at most this count as bounded.
constexpr std::size_t kBoundedClassSize = 4;

PhiClasses phi_classes(BitMatrixView g, const VertexSet& b1, const VertexSet& a1);

enum class Regime { bounded, polynomial, boundary };

double regime_function(double p);  // 2 - log_{1-p}(p) - 1/p
Regime classify_regime(double p);
std::string to_string(Regime r);

}  // namespace satlab
