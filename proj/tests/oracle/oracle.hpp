#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Labeled graph as an edge list on vertices 0..p-1.
struct Labeled {
  int p = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Upper-triangle bit string (pair order (0,1),(0,2),(1,2),(0,3),...), p <= 11.
std::uint64_t pack(const Labeled& g);

/// Maximum of pack() over every relabeling that lists vertices by
/// non-increasing degree. Equal for isomorphic graphs, distinct otherwise.
std::uint64_t canonical(const Labeled& g);

/// Maximum of pack() over all p! relabelings.
std::uint64_t canonical_all_permutations(const Labeled& g);

bool connected(const Labeled& g);

struct ClassCounts {
  std::map<int, std::size_t> by_vertices;           // p -> count
  std::map<std::pair<int, int>, std::size_t> by_class;  // (g, delta) -> count
  std::set<std::pair<int, std::uint64_t>> forms;        // (p, canonical)
  std::size_t total = 0;
};

/// Every labeled graph with g edges on p vertices (p = 2..g+1) whose degree
/// sequence is non-increasing in label order, kept if connected, bucketed by
/// canonical().
ClassCounts enumerate_connected(int g);

/// Coefficients (ascending) of det(-z D + A) over non-pendant vertices by
/// the permutation expansion.
std::vector<long long> psi_leibniz(const Labeled& g);

}  // namespace oracle
