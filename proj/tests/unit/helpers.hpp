#pragma once

#include "../oracle/oracle.hpp"
#include "qgraph/graph.hpp"

inline oracle::Labeled to_labeled(const qgraph::AdjacencyBits& bits) {
  oracle::Labeled out{bits.vertex_count(), {}};
  for (const auto& e : bits.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

inline oracle::Labeled to_labeled(const qgraph::Graph& g) { return to_labeled(g.bits()); }

inline qgraph::Graph from_edges(int p, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<qgraph::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return qgraph::Graph::validate(p, list);
}

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline qgraph::Graph paw() { return from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }
