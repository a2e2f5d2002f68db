#pragma once

#include <iosfwd>
#include <string>

#include "ugspec/graph.hpp"

namespace ugspec {

// Text edge-list format, one graph per file:
//   line 1: "n m"
//   lines 2..m+1: "u v" with 1 <= u < v <= n
// Deviations are rejected with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

std::string to_edge_list(const Graph& g);

}  // namespace ugspec
