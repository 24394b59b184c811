#include "qgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qgraph {

namespace {

std::string edge_name(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

AdjacencyBits::AdjacencyBits(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw GraphError(GraphErrorKind::TooManyVertices,
                     "vertex count " + std::to_string(vertex_count) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
  }
  rows_.assign(static_cast<std::size_t>(vertex_count), 0);
}

int AdjacencyBits::degree(Vertex v) const { return std::popcount(row(v)); }

int AdjacencyBits::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void AdjacencyBits::add_edge(Vertex a, Vertex b) {
  rows_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  rows_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
}

void AdjacencyBits::remove_edge(Vertex a, Vertex b) {
  rows_[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
  rows_[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);
}

int AdjacencyBits::component_count() const {
  const int n = vertex_count();
  if (n == 0) return 0;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t unseen = all;
  int components = 0;
  while (unseen) {
    ++components;
    std::uint64_t frontier = unseen & (~unseen + 1);
    std::uint64_t reached = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= row(std::countr_zero(f));
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
  }
  return components;
}

std::vector<Edge> AdjacencyBits::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (std::uint64_t r = row(u) >> (u + 1); r; r &= r - 1) {
      out.push_back({u, u + 1 + std::countr_zero(r)});
    }
  }
  return out;
}

AdjacencyBits AdjacencyBits::permuted(std::span<const Vertex> order) const {
  const int n = vertex_count();
  std::vector<Vertex> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = i;
  AdjacencyBits out(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t mapped = 0;
    for (std::uint64_t r = row(order[i]); r; r &= r - 1) {
      mapped |= std::uint64_t{1} << position[static_cast<std::size_t>(std::countr_zero(r))];
    }
    out.rows_[static_cast<std::size_t>(i)] = mapped;
  }
  return out;
}

Graph Graph::validate(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 2) {
    throw GraphError(GraphErrorKind::TooFewVertices,
                     "graph needs at least 2 vertices, got " + std::to_string(vertex_count));
  }
  AdjacencyBits bits(vertex_count);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "edge " + edge_name(e.u, e.v) + " references a vertex outside [0, " +
                           std::to_string(vertex_count - 1) + "]");
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::LoopEdge, "loop edge at vertex " + std::to_string(e.u));
    }
    if (bits.adjacent(e.u, e.v)) {
      throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + edge_name(e.u, e.v));
    }
    bits.add_edge(e.u, e.v);
  }
  return from_bits(bits);
}

Graph Graph::from_bits(const AdjacencyBits& bits) {
  const int n = bits.vertex_count();
  if (n < 2) {
    throw GraphError(GraphErrorKind::TooFewVertices,
                     "graph needs at least 2 vertices, got " + std::to_string(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bits.adjacent(v, v)) {
      throw GraphError(GraphErrorKind::LoopEdge, "loop edge at vertex " + std::to_string(v));
    }
  }
  if (!bits.connected()) {
    for (Vertex v = 0; v < n; ++v) {
      if (bits.degree(v) == 0) {
        throw GraphError(GraphErrorKind::Disconnected,
                         "graph is disconnected: vertex " + std::to_string(v) + " is isolated");
      }
    }
    // Name a vertex that cannot be reached from vertex 0.
    std::uint64_t reached = 1;
    for (bool grew = true; grew;) {
      std::uint64_t next = reached;
      for (std::uint64_t r = reached; r; r &= r - 1) next |= bits.row(std::countr_zero(r));
      grew = next != reached;
      reached = next;
    }
    Vertex missing = std::countr_zero(~reached);
    throw GraphError(GraphErrorKind::Disconnected,
                     "graph is disconnected: vertex " + std::to_string(missing) +
                         " is unreachable from vertex 0");
  }
  return Graph(bits, bits.edges());
}

std::vector<Vertex> pendant_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.is_pendant(v)) out.push_back(v);
  }
  return out;
}

ClassKey class_key(const Graph& graph) {
  const int g = graph.edge_count();
  const int p = graph.vertex_count();
  const int r = static_cast<int>(pendant_vertices(graph).size());
  return {g, g - p + r};
}

std::string to_string(const ClassKey& key) {
  return "(" + std::to_string(key.edges) + "," + std::to_string(key.delta) + ")";
}

std::string to_dot(const Graph& graph, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    os << "  " << v << (graph.is_pendant(v) ? " [shape=box];\n" : " [shape=circle];\n");
  }
  for (const auto& e : graph.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

Graph path_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1});
  return Graph::validate(vertex_count, edges);
}

Graph cycle_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < vertex_count; ++i) edges.push_back({i, (i + 1) % vertex_count});
  return Graph::validate(vertex_count, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::validate(leaves + 1, edges);
}

Graph complete_graph(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < vertex_count; ++i) {
    for (int j = i + 1; j < vertex_count; ++j) edges.push_back({i, j});
  }
  return Graph::validate(vertex_count, edges);
}

}  // namespace qgraph
