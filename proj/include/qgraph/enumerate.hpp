#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxEdges = 10;

struct EnumerateOptions {
  int max_edges = kDefaultMaxEdges;
  int workers = 0;  // 0: resolve from environment / hardware
};

struct EnumerationRun {
  int edges = 0;
  std::map<ClassKey, std::size_t> emitted;
  std::vector<Graph> representatives;
};

/// Every simple connected graph with exactly `edges` edges, once per
/// isomorphism class, as canonical forms ordered by (vertex count, canonical
/// code). Output is identical for every worker count.
///
/// For each vertex count p the generator grows graphs one edge at a time from
/// the empty graph on p vertices. Intermediate graphs may be disconnected; a
/// child survives only if it can still become connected with the remaining
/// edges, and children are deduplicated by canonical code after each level.
std::vector<Graph> enumerate_connected(int edges, const EnumerateOptions& options = {});

EnumerationRun run_enumeration(int edges, const EnumerateOptions& options = {});

std::map<ClassKey, std::size_t> count_by_class(int edges, const EnumerateOptions& options = {});

}  // namespace qgraph
