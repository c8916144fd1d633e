#include "satlab/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "satlab/embed.hpp"
#include "satlab/edge_list.hpp"
#include "satlab/errors.hpp"

namespace satlab {

namespace {

constexpr std::size_t kAutomorphismCap = 200000;

struct AutSearch {
  const std::vector<std::uint32_t>& masks;
  std::size_t k;
  std::vector<Vertex> perm;
  std::uint32_t used = 0;
  std::vector<std::vector<Vertex>> found;

  void rec(std::size_t i) {
    if (found.size() >= kAutomorphismCap) return;
    if (i == k) {
      found.push_back(perm);
      return;
    }
    for (Vertex c = 0; c < k; ++c) {
      if (used >> c & 1u) continue;
      if (std::popcount(masks[c]) != std::popcount(masks[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = ((masks[i] >> j) & 1u) == ((masks[c] >> perm[j]) & 1u);
      if (!ok) continue;
      perm[i] = c;
      used |= 1u << c;
      rec(i + 1);
      used &= ~(1u << c);
    }
  }
};

std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

Pattern Pattern::build(const Graph& g, std::string name) {
  if (g.vertex_count() > kMaxPatternVertices)
    throw ParameterError("pattern " + name + " has more than " +
                         std::to_string(kMaxPatternVertices) + " vertices");
  Pattern p;
  p.g_ = std::make_shared<const Graph>(g);
  p.name_ = std::move(name);
  const std::size_t k = g.vertex_count();
  p.masks_.assign(k, 0);
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex w : g.neighbors(v)) p.masks_[v] |= 1u << w;
    if (g.degree(v) == 0) ++p.isolated_;
  }

  AutSearch s{p.masks_, k, std::vector<Vertex>(k), 0, {}};
  s.rec(0);
  p.aut_count_ = s.found.size();

  std::vector<std::size_t> parent(k * k);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& perm : s.found)
    for (Vertex a = 0; a < k; ++a)
      for (Vertex b : g.neighbors(a)) {
        auto x = find_root(parent, a * k + b);
        auto y = find_root(parent, perm[a] * k + perm[b]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = 0; b < k; ++b)
      if (g.adjacent(a, b) && find_root(parent, a * k + b) == a * k + b) p.reps_.push_back({a, b});
  return p;
}

Pattern Pattern::make(const Graph& g, std::string name) {
  if (g.edge_count() == 0) throw ParameterError("pattern " + name + " has no edges");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw ParameterError("pattern " + name + " has isolated vertex " + std::to_string(v));
  return build(g, std::move(name));
}

Pattern Pattern::derived(const Graph& g, std::string name) { return build(g, std::move(name)); }

bool isomorphic(const Pattern& a, const Pattern& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return contains_copy(a.graph(), b).has_value();
}

Family::Family(std::vector<Pattern> members) {
  if (members.empty()) throw ParameterError("empty pattern family");
  for (auto& p : members) {
    bool dup = false;
    for (const auto& q : m_)
      if (isomorphic(p, q)) {
        dup = true;
        break;
      }
    if (!dup) m_.push_back(std::move(p));
  }
}

std::size_t Family::max_vertices() const {
  std::size_t k = 0;
  for (const auto& p : m_) k = std::max(k, p.vertex_count());
  return k;
}

std::string Family::name() const {
  std::string s;
  for (const auto& p : m_) {
    if (!s.empty()) s += "|";
    s += p.name();
  }
  return s;
}

Graph complete_graph(std::size_t k) {
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw ParameterError("cycle needs at least 3 vertices");
  Graph g(k);
  for (Vertex u = 0; u < k; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % k));
  return g;
}

Graph path_graph(std::size_t k) {
  if (k < 2) throw ParameterError("path needs at least 2 vertices");
  Graph g(k);
  for (Vertex u = 0; u + 1 < k; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw ParameterError("star needs at least one leaf");
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw ParameterError("multipartite part of size 0");
    for (std::size_t j = 0; j < parts[i]; ++j) part_of.push_back(i);
    n += parts[i];
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad pattern spec: " + spec);
  return std::stoul(s);
}

}  // namespace

Pattern parse_pattern(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty pattern spec");
  if (spec == "petersen") return Pattern::make(petersen_graph(), spec);
  if (spec[0] == '@') {
    Graph g = read_edge_list_file(spec.substr(1));
    if (g.vertex_count() > kMaxPatternVertices) throw ParameterError("pattern too large: " + spec);
    return Pattern::make(g, spec);
  }
  if (spec.rfind("M:", 0) == 0) {
    std::vector<std::size_t> parts;
    std::stringstream ss(spec.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(parse_count(tok, spec));
    if (parts.size() < 2) throw ParseError("multipartite pattern needs at least two parts: " + spec);
    std::sort(parts.begin(), parts.end());
    return Pattern::make(complete_multipartite(parts), spec);
  }
  if (spec.rfind("E:", 0) == 0) {
    std::vector<Edge> es;
    Vertex n = 0;
    std::stringstream ss(spec.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw ParseError("bad edge token in " + spec);
      auto u = static_cast<Vertex>(parse_count(tok.substr(0, dash), spec));
      auto v = static_cast<Vertex>(parse_count(tok.substr(dash + 1), spec));
      if (u == v) throw ParseError("self-loop in " + spec);
      es.push_back(make_edge(u, v));
      n = std::max({n, u + 1, v + 1});
    }
    if (n > kMaxPatternVertices) throw ParameterError("pattern too large: " + spec);
    return Pattern::make(Graph::from_edges(n, es), spec);
  }
  const char kind = spec[0];
  const std::size_t k = parse_count(spec.substr(1), spec);
  if (k > kMaxPatternVertices) throw ParameterError("pattern too large: " + spec);
  switch (kind) {
    case 'K':
      if (k < 2) throw ParameterError("K needs at least 2 vertices");
      return Pattern::make(complete_graph(k), spec);
    case 'C':
      return Pattern::make(cycle_graph(k), spec);
    case 'P':
      return Pattern::make(path_graph(k), spec);
    case 'S':
      if (k + 1 > kMaxPatternVertices) throw ParameterError("pattern too large: " + spec);
      return Pattern::make(star_graph(k), spec);
    default:
      throw ParseError("unknown pattern spec: " + spec);
  }
}

}  // namespace satlab
