#pragma once

// Simple connected graphs with dense vertex labels 0..p-1.
//
// Two representations live here: AdjacencyBits is an unchecked labeled simple
// graph (possibly disconnected, used while generating and decoding), and Graph
// is the validated, immutable connected graph the rest of the library consumes.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgraph {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

enum class GraphErrorKind {
  LoopEdge,
  DuplicateEdge,
  Disconnected,
  VertexOutOfRange,
  TooFewVertices,
  TooManyVertices,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Labeled simple graph stored as one neighbor bitmask per vertex.
class AdjacencyBits {
 public:
  AdjacencyBits() = default;
  explicit AdjacencyBits(int vertex_count);

  int vertex_count() const noexcept { return static_cast<int>(rows_.size()); }
  std::uint64_t row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex a, Vertex b) const { return (row(a) >> b) & 1U; }
  int degree(Vertex v) const;
  int edge_count() const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  /// Number of connected components, isolated vertices included.
  int component_count() const;
  bool connected() const { return component_count() <= 1; }

  std::vector<Edge> edges() const;

  /// Relabel so that new vertex i is old vertex order[i].
  AdjacencyBits permuted(std::span<const Vertex> order) const;

  bool operator==(const AdjacencyBits&) const = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// Validated simple connected graph; immutable once constructed.
class Graph {
 public:
  /// Checks simplicity and connectivity and sorts the edge list.
  /// Throws GraphError naming the offending vertex or edge.
  static Graph validate(int vertex_count, std::span<const Edge> edges);
  static Graph from_bits(const AdjacencyBits& bits);

  int vertex_count() const noexcept { return bits_.vertex_count(); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const AdjacencyBits& bits() const noexcept { return bits_; }

  int degree(Vertex v) const { return bits_.degree(v); }
  bool adjacent(Vertex a, Vertex b) const { return bits_.adjacent(a, b); }
  bool is_pendant(Vertex v) const { return degree(v) == 1; }
  bool is_tree() const { return edge_count() == vertex_count() - 1; }

  bool operator==(const Graph& other) const { return bits_ == other.bits_; }

 private:
  Graph(AdjacencyBits bits, std::vector<Edge> edges)
      : bits_(std::move(bits)), edges_(std::move(edges)) {}

  AdjacencyBits bits_;
  std::vector<Edge> edges_;
};

/// Partition key: graphs with different keys are never cospectral.
struct ClassKey {
  int edges = 0;  // g
  int delta = 0;  // g - p + r

  auto operator<=>(const ClassKey&) const = default;
};

std::vector<Vertex> pendant_vertices(const Graph& graph);
ClassKey class_key(const Graph& graph);

std::string to_string(const ClassKey& key);

/// Graphviz rendering; pendant vertices are drawn as boxes.
std::string to_dot(const Graph& graph, const std::string& name = "G");

// Named families used throughout tests and examples.
Graph path_graph(int vertex_count);
Graph cycle_graph(int vertex_count);
Graph star_graph(int leaves);
Graph complete_graph(int vertex_count);

}  // namespace qgraph
