#include "satlab/pattern_props.hpp"

#include <algorithm>
#include <functional>

#include "satlab/embed.hpp"
#include "satlab/errors.hpp"

namespace satlab {

namespace {

std::vector<std::uint32_t> masks_of(const Graph& f) {
  if (f.vertex_count() > kMaxPatternVertices) throw ParameterError("pattern too large");
  std::vector<std::uint32_t> m(f.vertex_count(), 0);
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    for (Vertex w : f.neighbors(v)) m[v] |= 1u << w;
  return m;
}

// DSatur backtracking: can f be coloured with k colours?
bool colourable(const std::vector<std::uint32_t>& adj, std::size_t k) {
  const std::size_t n = adj.size();
  std::vector<int> colour(n, -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t done) -> bool {
    if (done == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      std::uint32_t seen = 0;
      for (std::uint32_t m = adj[v]; m; m &= m - 1) {
        int c = colour[std::countr_zero(m)];
        if (c >= 0) seen |= 1u << c;
      }
      const int sat = std::popcount(seen), deg = std::popcount(adj[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint32_t seen = 0;
    int used = 0;
    for (std::size_t v = 0; v < n; ++v) used = std::max(used, colour[v] + 1);
    for (std::uint32_t m = adj[pick]; m; m &= m - 1) {
      int c = colour[std::countr_zero(m)];
      if (c >= 0) seen |= 1u << c;
    }
    // Only one fresh colour needs trying; the others are symmetric.
    const int limit = std::min<int>(static_cast<int>(k), used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen >> c & 1u) continue;
      colour[pick] = c;
      if (rec(done + 1)) return true;
      colour[pick] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::size_t chromatic_number(const Graph& f) {
  const auto adj = masks_of(f);
  if (adj.empty()) return 0;
  for (std::size_t k = 1;; ++k)
    if (colourable(adj, k)) return k;
}

std::vector<Colouring> optimal_colourings(const Graph& f) {
  const auto adj = masks_of(f);
  const std::size_t n = adj.size();
  const std::size_t chi = chromatic_number(f);
  std::vector<Colouring> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> cls;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      if (cls.size() != chi) return;
      Colouring c;
      for (auto m : cls) {
        std::vector<Vertex> part;
        for (std::uint32_t x = m; x; x &= x - 1) part.push_back(static_cast<Vertex>(std::countr_zero(x)));
        c.push_back(std::move(part));
      }
      out.push_back(std::move(c));
      return;
    }
    if (n - v < chi - std::min(chi, cls.size())) return;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] & adj[v]) continue;
      cls[i] |= 1u << v;
      rec(v + 1);
      cls[i] &= ~(1u << v);
    }
    if (cls.size() < chi) {
      cls.push_back(1u << v);
      rec(v + 1);
      cls.pop_back();
    }
  };
  rec(0);
  return out;
}

std::size_t max_colour_class(const Graph& f) {
  std::size_t s = 0;
  for (const auto& c : optimal_colourings(f))
    for (const auto& part : c) s = std::max(s, part.size());
  return s;
}

std::optional<NTriangleWitness> detect_ntriangle(const Graph& f) {
  const auto cols = optimal_colourings(f);
  std::size_t s_star = 0;
  for (const auto& c : cols)
    for (const auto& part : c) s_star = std::max(s_star, part.size());
  for (const auto& c : cols)
    for (const auto& part : c) {
      if (part.size() != s_star) continue;
      std::uint32_t in = 0;
      for (Vertex x : part) in |= 1u << x;
      for (Vertex v = 0; v < f.vertex_count(); ++v) {
        if (in >> v & 1u) continue;
        bool inside = true;
        for (Vertex w : f.neighbors(v)) inside = inside && (in >> w & 1u);
        if (inside) return NTriangleWitness{part, v, s_star, c};
      }
    }
  return std::nullopt;
}

std::vector<std::vector<Edge>> blocks(const Graph& b) {
  const std::size_t n = b.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;
  std::function<void(Vertex, int)> dfs = [&](Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : b.neighbors(u)) {
      if (static_cast<int>(w) == parent) continue;
      if (disc[w] < 0) {
        stack.push_back(make_edge(u, w));
        dfs(w, static_cast<int>(u));
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> blk;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            blk.push_back(top);
          } while (!(top == make_edge(u, w)));
          std::sort(blk.begin(), blk.end());
          out.push_back(std::move(blk));
        }
      } else if (disc[w] < disc[u]) {
        low[u] = std::min(low[u], disc[w]);
        stack.push_back(make_edge(u, w));
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return out;
}

namespace {

Pattern block_pattern(const std::vector<Edge>& blk) {
  std::vector<Vertex> vs;
  for (const auto& e : blk) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  Graph g(vs.size());
  auto idx = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  for (const auto& e : blk) g.add_edge(idx(e.u), idx(e.v));
  return Pattern::derived(g, "block");
}

}  // namespace

bool is_degenerate(const Graph& b, const Pattern& a) {
  for (const auto& blk : blocks(b))
    if (!contains_copy(a.graph(), block_pattern(blk))) return false;
  return true;
}

std::vector<std::vector<Vertex>> independent_sets(const Graph& f) {
  const auto adj = masks_of(f);
  const std::size_t n = adj.size();
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::uint32_t m = s; m && ok; m &= m - 1) ok = !(adj[std::countr_zero(m)] & s);
    if (!ok) continue;
    std::vector<Vertex> set;
    for (std::uint32_t m = s; m; m &= m - 1) set.push_back(static_cast<Vertex>(std::countr_zero(m)));
    out.push_back(std::move(set));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

Graph remove_vertices(const Graph& f, const std::vector<Vertex>& removed) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.vertex_count(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  return f.induced(keep);
}

std::optional<StarWitness> detect_star(const Graph& f) {
  const auto indep = independent_sets(f);
  for (const auto& e : f.edges()) {
    Pattern a = Pattern::derived(remove_vertices(f, {e.u, e.v}), "remainder");
    bool ok = true;
    for (const auto& i : indep) {
      if (is_degenerate(remove_vertices(f, i), a)) {
        ok = false;
        break;
      }
    }
    if (ok) return StarWitness{e, a};
  }
  return std::nullopt;
}

BipartiteSide family_min_bipartite_side(const Family& fam) {
  BipartiteSide best{SIZE_MAX, 0};
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Graph& f = fam[i].graph();
    if (chromatic_number(f) != 2) continue;
    for (const auto& c : optimal_colourings(f))
      for (const auto& part : c)
        if (part.size() < best.ell) best = {part.size(), i};
  }
  if (best.ell == SIZE_MAX) throw ApplicabilityError("family has no bipartite member");
  return best;
}

}  // namespace satlab
