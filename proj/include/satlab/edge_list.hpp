#pragma once

#include <iosfwd>
#include <string>

#include "satlab/graph.hpp"

namespace satlab {

// Text format: header "n m", then m lines "u v" with u < v in ascending
// lexicographic order. Lines starting with '#' are ignored on input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace satlab
