#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "diskoct/graph.hpp"

namespace diskoct {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text format:
//   # comment
//   p <n> <m>        (optional; otherwise n = 1 + largest id seen)
//   <u> <v>          (0-based, one edge per line)
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Emits the `p` header followed by edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Whitespace- or comma-separated vertex ids, `#` comments allowed.
VertexSet read_vertex_list(std::istream& in);

}  // namespace diskoct
