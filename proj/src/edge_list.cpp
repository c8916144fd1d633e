#include "satlab/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "satlab/errors.hpp"

namespace satlab {

namespace {

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

long long parse_int(std::istringstream& ss, std::size_t lineno) {
  long long x;
  if (!(ss >> x)) throw ParseError("line " + std::to_string(lineno) + ": expected integer");
  return x;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError("missing header line");
  std::istringstream hs(line);
  const long long n = parse_int(hs, lineno);
  const long long m = parse_int(hs, lineno);
  if (n < 0 || m < 0) throw ParseError("negative size in header");
  Graph g(static_cast<std::size_t>(n));
  long long read = 0;
  while (next_line(in, line, lineno)) {
    std::istringstream ss(line);
    const long long u = parse_int(ss, lineno);
    const long long v = parse_int(ss, lineno);
    std::string rest;
    if (ss >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing data");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw RangeError("line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw SelfLoopError("line " + std::to_string(lineno) + ": self-loop");
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    ++read;
  }
  if (read != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(read));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_edge_list(g, out);
}

}  // namespace satlab
