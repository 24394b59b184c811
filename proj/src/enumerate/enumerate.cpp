#include "qgraph/enumerate.hpp"

#include <algorithm>
#include <string>

#include "qgraph/canonical.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/parallel.hpp"

namespace qgraph {

namespace {

// Canonical codes of all graphs on `vertices` vertices reachable at the next
// edge count that can still be completed to a connected graph with `edges`.
std::vector<std::string> grow_level(const std::vector<std::string>& level, int vertices,
                                    int next_edge_count, int edges, int workers) {
  std::vector<std::vector<std::string>> buckets(level.size());
  parallel_for(level.size(), workers, [&](std::size_t index, int) {
    AdjacencyBits parent = decode_graph6(level[index]);
    auto& out = buckets[index];
    for (Vertex j = 1; j < vertices; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (parent.adjacent(i, j)) continue;
        parent.add_edge(i, j);
        if (parent.component_count() - 1 <= edges - next_edge_count) {
          out.push_back(canonical_code(parent).bytes);
        }
        parent.remove_edge(i, j);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });

  std::vector<std::string> merged;
  for (auto& bucket : buckets) {
    merged.insert(merged.end(), std::make_move_iterator(bucket.begin()),
                  std::make_move_iterator(bucket.end()));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace

std::vector<Graph> enumerate_connected(int edges, const EnumerateOptions& options) {
  if (edges < 1 || edges > options.max_edges) {
    throw LimitExceeded("edge count " + std::to_string(edges) + " outside [1, " +
                        std::to_string(options.max_edges) + "]");
  }
  const int workers = resolve_workers(options.workers);

  std::vector<Graph> out;
  for (int p = 2; p <= edges + 1; ++p) {
    if (p * (p - 1) / 2 < edges) continue;
    std::vector<std::string> level{encode_graph6(AdjacencyBits(p))};
    for (int k = 1; k <= edges; ++k) level = grow_level(level, p, k, edges, workers);
    // Feasibility at k == edges already forces connectivity.
    for (const auto& code : level) out.push_back(Graph::from_bits(decode_graph6(code)));
  }
  return out;
}

EnumerationRun run_enumeration(int edges, const EnumerateOptions& options) {
  EnumerationRun run;
  run.edges = edges;
  run.representatives = enumerate_connected(edges, options);
  for (const auto& graph : run.representatives) ++run.emitted[class_key(graph)];
  return run;
}

std::map<ClassKey, std::size_t> count_by_class(int edges, const EnumerateOptions& options) {
  return run_enumeration(edges, options).emitted;
}

}  // namespace qgraph
