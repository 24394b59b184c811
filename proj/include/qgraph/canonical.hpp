#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Isomorphism-invariant byte string: the graph6 encoding of the canonical
/// relabeling. Two graphs share a code iff they are isomorphic.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
};

/// Canonical vertex order: position i of the canonical form holds original
/// vertex order[i].
///
/// Iterated equitable refinement of the degree partition, then backtracking
/// over individualizations of the first non-singleton cell. The leaf whose
/// upper-triangle adjacency string is lexicographically largest wins. Within a
/// cell only one vertex per twin class is individualized, since swapping twins
/// is an automorphism that fixes the partition.
std::vector<Vertex> canonical_order(const AdjacencyBits& bits);

AdjacencyBits canonical_form(const AdjacencyBits& bits);
CanonicalCode canonical_code(const AdjacencyBits& bits);
CanonicalCode canonical_code(const Graph& graph);

/// The canonical relabeling of a connected graph.
Graph canonical_graph(const Graph& graph);

}  // namespace qgraph
