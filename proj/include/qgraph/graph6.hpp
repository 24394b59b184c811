#pragma once

// graph6 codec: size header N(n), then the upper triangle of the adjacency
// matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// into 6-bit groups offset by 63 and zero-padded on the right.

#include <stdexcept>
#include <string>
#include <string_view>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class Graph6ErrorKind { BadChar, TruncatedBits, SizeMismatch };

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Graph6ErrorKind kind() const noexcept { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Decodes one graph6 line (optional ">>graph6<<" prefix and trailing
/// newline accepted) without any connectivity check.
AdjacencyBits decode_graph6(std::string_view line);
std::string encode_graph6(const AdjacencyBits& bits);

/// Decode and validate; throws Graph6Error or GraphError.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& graph);

}  // namespace qgraph
