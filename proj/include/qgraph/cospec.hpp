#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qgraph/enumerate.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"

namespace qgraph {

/// Set mode compares zero sets (squarefree parts); multiset mode compares
/// zeros with multiplicity (monic normalizations).
enum class CompareMode { Set, Multiset };

std::string to_string(CompareMode mode);
/// Accepts "set" or "multiset"; throws std::invalid_argument otherwise.
CompareMode parse_mode(std::string_view text);

struct SpectralSignature {
  int delta = 0;
  IntPolynomial squarefree;        // primitive, positive leading coefficient
  std::vector<mpq_class> monic;    // psi / lc(psi)

  /// Exact comparison key (without the class key).
  std::string key(CompareMode mode) const;
};

SpectralSignature signature(const Graph& graph);
SpectralSignature signature(const IntPolynomial& psi, int delta);

struct ClassCount {
  ClassKey key;
  std::size_t count = 0;
};

struct CospectralPair {
  ClassKey key;
  std::string a;  // graph6, a < b
  std::string b;
  std::string shared;  // signature text under the scan mode
  std::string psi_a;
  std::string psi_b;
};

struct ScanOptions {
  CompareMode mode = CompareMode::Set;
  int max_edges = kDefaultMaxEdges;
  int workers = 0;
};

struct CospectralReport {
  int min_edges = 0;
  int max_edges = 0;
  CompareMode mode = CompareMode::Set;
  std::vector<ClassCount> classes;
  std::vector<CospectralPair> pairs;  // ordered by (class key, a, b)
};

/// Enumerates every g in [min_edges, max_edges] and reports every pair of
/// non-isomorphic graphs in the same (g, delta) class with equal signature
/// keys. Throws LimitExceeded for bounds outside [1, max_edges].
CospectralReport scan(int min_edges, int max_edges, const ScanOptions& options = {});

}  // namespace qgraph
