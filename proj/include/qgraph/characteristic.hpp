#pragma once

// The 2g x 2g linear system in the coefficients (A_j, B_j) of
// y_j(x) = A_j s(lambda, x) + B_j c(lambda, x) on each edge. Its determinant
// vanishes exactly on the spectrum, which makes it an oracle for the
// eigenvalue construction that is independent of psi.

#include <Eigen/Dense>

#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Tail -> head. Edges at a pendant vertex start there; the rest run from the
/// lower to the higher label.
struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;
};

std::vector<OrientedEdge> orient_edges(const Graph& graph);

struct CharacteristicMatrixSample {
  double lambda = 0.0;
  Eigen::MatrixXd entries;  // columns: A_0, B_0, A_1, B_1, ...
};

/// Rows: one Dirichlet row per pendant vertex, then for each interior vertex
/// d(v) - 1 continuity rows followed by one Kirchhoff row.
CharacteristicMatrixSample characteristic_matrix(const Graph& graph, double lambda,
                                                 double length = 1.0);

double characteristic_determinant(const Graph& graph, double lambda, double length = 1.0);

/// d/dlambda of the determinant by complex-step differentiation.
double characteristic_determinant_derivative(const Graph& graph, double lambda,
                                             double length = 1.0);

struct CharacteristicZero {
  double lambda = 0.0;
  int kernel_dimension = 0;  // nullity of the matrix at the zero
};

struct ZeroSearchOptions {
  double lambda_max = 200.0;
  double phase_step = 5e-4;          // grid step in sqrt(lambda) * l
  double residual_tolerance = 1e-8;  // |det| relative to the Hadamard bound
  double rank_tolerance = 1e-7;      // singular values relative to the largest
};

/// Zeros of the determinant on (0, lambda_max). Odd-order zeros come from
/// sign changes on the grid; even-order zeros from local minima of |det|
/// whose derivative changes sign and whose residual is negligible.
std::vector<CharacteristicZero> characteristic_zeros(const Graph& graph, double length = 1.0,
                                                     const ZeroSearchOptions& options = {});

}  // namespace qgraph
