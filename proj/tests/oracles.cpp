#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

bool adj(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u))
    if (w == v) return true;
  return false;
}

// Calls visit(map) for every injective map V(f) -> V(h) preserving edges of f
// until visit returns true.
bool for_each_embedding(const Graph& h, const Graph& f, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const std::size_t k = f.vertex_count(), n = h.vertex_count();
  if (k > n) return false;
  std::vector<Vertex> map(k);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) return visit(map);
    for (Vertex c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (adj(f, static_cast<Vertex>(i), static_cast<Vertex>(j))) ok = adj(h, c, map[j]);
      if (!ok) continue;
      used[c] = true;
      map[i] = c;
      if (rec(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

Graph with_edge(const Graph& h, Edge e) {
  Graph out(h.vertex_count());
  for (const auto& x : h.edges()) out.add_edge(x.u, x.v);
  out.add_edge(e.u, e.v);
  return out;
}

bool connected_without(const Graph& g, const std::vector<Vertex>& vs, Vertex skip) {
  std::vector<Vertex> rest;
  for (Vertex v : vs)
    if (v != skip) rest.push_back(v);
  if (rest.size() <= 1) return true;
  std::vector<bool> in(g.vertex_count(), false), seen(g.vertex_count(), false);
  for (Vertex v : rest) in[v] = true;
  std::vector<Vertex> stack{rest[0]};
  seen[rest[0]] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == rest.size();
}

// Induced subgraph on vs is two-vertex-connected (K2 counts).
bool two_connected(const Graph& g, const std::vector<Vertex>& vs) {
  if (vs.size() < 2) return false;
  if (vs.size() == 2) return adj(g, vs[0], vs[1]);
  if (!connected_without(g, vs, static_cast<Vertex>(g.vertex_count()))) return false;
  for (Vertex v : vs)
    if (!connected_without(g, vs, v)) return false;
  return true;
}

Graph induced(const Graph& g, const std::vector<Vertex>& vs) {
  Graph out(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adj(g, vs[i], vs[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

std::vector<Vertex> complement(std::size_t n, const std::vector<Vertex>& drop) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

}  // namespace

bool contains(const Graph& h, const Graph& f) {
  return for_each_embedding(h, f, [](const std::vector<Vertex>&) { return true; });
}

bool completes(const Graph& h, Edge e, const Graph& f) {
  const Graph he = with_edge(h, e);
  return for_each_embedding(he, f, [&](const std::vector<Vertex>& m) {
    for (const auto& x : f.edges()) {
      Vertex a = m[x.u], b = m[x.v];
      if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) return true;
    }
    return false;
  });
}

bool saturated(const Graph& g, const Graph& h, const Graph& f) {
  if (contains(h, f)) return false;
  for (const auto& e : g.edges())
    if (!adj(h, e.u, e.v) && !completes(h, e, f)) return false;
  return true;
}

std::size_t chromatic_number(const Graph& f) {
  const std::size_t n = f.vertex_count();
  if (f.edge_count() == 0) return n == 0 ? 0 : 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> col(n, 0);
    // Odometer over all k^n colourings.
    while (true) {
      bool proper = true;
      for (const auto& e : f.edges())
        if (col[e.u] == col[e.v]) {
          proper = false;
          break;
        }
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

bool has_star_property(const Graph& f) {
  const std::size_t n = f.vertex_count();
  std::vector<std::vector<Vertex>> indep;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = !adj(f, s[i], s[j]);
    if (ok) indep.push_back(s);
  }
  for (const auto& uv : f.edges()) {
    const Graph a = induced(f, complement(n, {uv.u, uv.v}));
    bool all = true;
    for (const auto& i : indep) {
      const auto keep = complement(n, i);
      const Graph b = induced(f, keep);
      // Non-degenerate: some two-vertex-connected induced subgraph of b misses a.
      bool nondeg = false;
      const std::size_t m = b.vertex_count();
      for (std::uint32_t mask = 0; mask < (1u << m) && !nondeg; ++mask) {
        std::vector<Vertex> w;
        for (Vertex v = 0; v < m; ++v)
          if (mask >> v & 1u) w.push_back(v);
        if (two_connected(b, w) && !contains(a, induced(b, w))) nondeg = true;
      }
      if (!nondeg) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::size_t sat_number(const Graph& g, const Graph& f) {
  const auto es = g.edges();
  const std::size_t m = es.size();
  if (m > 20) throw std::invalid_argument("sat_number oracle limited to 20 host edges");
  std::size_t best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    Graph h(g.vertex_count());
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) h.add_edge(es[i].u, es[i].v);
    if (saturated(g, h, f)) best = k;
  }
  return best;
}

Graph from_spec(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<Graph> atlas7(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::size_t n;
    ss >> n;
    Graph g(n);
    std::string tok;
    while (ss >> tok) {
      const auto d = tok.find('-');
      g.add_edge(static_cast<Vertex>(std::stoul(tok.substr(0, d))), static_cast<Vertex>(std::stoul(tok.substr(d + 1))));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
