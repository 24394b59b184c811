#include "qgraph/characteristic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace qgraph {

namespace {

using Complex = std::complex<double>;

template <typename Scalar>
struct Basis {
  Scalar s;   // s(lambda, l)
  Scalar c;   // c(lambda, l)
  Scalar ds;  // s'(lambda, l)
  Scalar dc;  // c'(lambda, l)
};

Basis<double> basis_at(double lambda, double l) {
  if (lambda > 0.0) {
    const double w = std::sqrt(lambda);
    return {std::sin(w * l) / w, std::cos(w * l), std::cos(w * l), -w * std::sin(w * l)};
  }
  if (lambda < 0.0) {
    const double mu = std::sqrt(-lambda);
    return {std::sinh(mu * l) / mu, std::cosh(mu * l), std::cosh(mu * l), mu * std::sinh(mu * l)};
  }
  return {l, 1.0, 1.0, 0.0};
}

Basis<Complex> basis_at(Complex lambda, double l) {
  const Complex w = std::sqrt(lambda);
  return {std::sin(w * l) / w, std::cos(w * l), std::cos(w * l), -w * std::sin(w * l)};
}

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Matrix<Scalar> assemble(const Graph& graph, const std::vector<OrientedEdge>& oriented,
                        const Basis<Scalar>& b) {
  const int g = graph.edge_count();
  Matrix<Scalar> m = Matrix<Scalar>::Zero(2 * g, 2 * g);
  auto col_a = [](int j) { return 2 * j; };
  auto col_b = [](int j) { return 2 * j + 1; };

  // Edges incident to each vertex, in edge order.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(graph.vertex_count()));
  for (int j = 0; j < g; ++j) {
    incident[static_cast<std::size_t>(oriented[static_cast<std::size_t>(j)].tail)].push_back(j);
    incident[static_cast<std::size_t>(oriented[static_cast<std::size_t>(j)].head)].push_back(j);
  }

  int row = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.is_pendant(v)) continue;
    const int j = incident[static_cast<std::size_t>(v)].front();
    if (oriented[static_cast<std::size_t>(j)].tail == v) {
      m(row, col_b(j)) = Scalar(1);  // y_j(0) = B_j = 0
    } else {
      // Only P2 has an edge with two pendant ends: y_j(l) = 0.
      m(row, col_a(j)) = b.s;
      m(row, col_b(j)) = b.c;
    }
    ++row;
  }

  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.is_pendant(v)) continue;
    const auto& edges = incident[static_cast<std::size_t>(v)];
    // Value of edge j's solution at v, written into `row` with weight `sign`.
    auto put_value = [&](int j, int r, double sign) {
      if (oriented[static_cast<std::size_t>(j)].head == v) {
        m(r, col_a(j)) += sign * b.s;
        m(r, col_b(j)) += sign * b.c;
      } else {
        m(r, col_b(j)) += Scalar(sign);
      }
    };
    for (std::size_t i = 1; i < edges.size(); ++i) {
      put_value(edges.front(), row, 1.0);
      put_value(edges[i], row, -1.0);
      ++row;
    }
    for (int j : edges) {
      if (oriented[static_cast<std::size_t>(j)].head == v) {
        m(row, col_a(j)) += b.ds;
        m(row, col_b(j)) += b.dc;
      } else {
        m(row, col_a(j)) -= Scalar(1);
      }
    }
    ++row;
  }
  return m;
}

double hadamard_bound(const Eigen::MatrixXd& m) {
  double bound = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) bound *= m.row(i).norm();
  return bound;
}

int kernel_dimension(const Eigen::MatrixXd& m, double tolerance) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double largest = sv(0);
  int nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tolerance * largest) ++nullity;
  }
  return nullity;
}

template <typename F>
double bisect_sign_change(F&& f, double a, double b, double fa) {
  for (int iteration = 0; iteration < 200; ++iteration) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<OrientedEdge> orient_edges(const Graph& graph) {
  std::vector<OrientedEdge> out;
  out.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) {
    if (graph.is_pendant(e.u)) {
      out.push_back({e.u, e.v});
    } else if (graph.is_pendant(e.v)) {
      out.push_back({e.v, e.u});
    } else {
      out.push_back({e.u, e.v});
    }
  }
  return out;
}

CharacteristicMatrixSample characteristic_matrix(const Graph& graph, double lambda,
                                                 double length) {
  return {lambda, assemble(graph, orient_edges(graph), basis_at(lambda, length))};
}

double characteristic_determinant(const Graph& graph, double lambda, double length) {
  return characteristic_matrix(graph, lambda, length).entries.partialPivLu().determinant();
}

double characteristic_determinant_derivative(const Graph& graph, double lambda, double length) {
  const double h = 1e-20 * std::max(1.0, std::abs(lambda));
  const Matrix<Complex> m =
      assemble(graph, orient_edges(graph), basis_at(Complex(lambda, h), length));
  return m.partialPivLu().determinant().imag() / h;
}

std::vector<CharacteristicZero> characteristic_zeros(const Graph& graph, double length,
                                                     const ZeroSearchOptions& options) {
  const auto oriented = orient_edges(graph);
  auto det = [&](double lambda) {
    return assemble(graph, oriented, basis_at(lambda, length)).partialPivLu().determinant();
  };
  auto derivative = [&](double lambda) {
    return characteristic_determinant_derivative(graph, lambda, length);
  };

  const double phase_max = std::sqrt(options.lambda_max) * length;
  std::vector<double> grid;
  for (double t = options.phase_step; t < phase_max; t += options.phase_step) {
    grid.push_back((t / length) * (t / length));
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = det(grid[i]);

  std::vector<double> found;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      found.push_back(grid[i]);
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      found.push_back(bisect_sign_change(det, grid[i], grid[i + 1], values[i]));
      continue;
    }
    if (i == 0 || i + 1 >= grid.size()) continue;
    const bool same_sign = (values[i - 1] < 0.0) == (values[i] < 0.0) &&
                           (values[i + 1] < 0.0) == (values[i] < 0.0);
    const double here = std::abs(values[i]);
    if (!same_sign || here > std::abs(values[i - 1]) || here > std::abs(values[i + 1])) continue;
    const double a = grid[i - 1];
    const double b = grid[i + 1];
    const double da = derivative(a);
    const double db = derivative(b);
    if (da == 0.0 || db == 0.0 || (da < 0.0) == (db < 0.0)) continue;
    const double x = bisect_sign_change(derivative, a, b, da);
    const auto sample = assemble(graph, oriented, basis_at(x, length));
    const double residual = std::abs(sample.partialPivLu().determinant());
    if (residual <= options.residual_tolerance * hadamard_bound(sample)) found.push_back(x);
  }

  std::sort(found.begin(), found.end());
  std::vector<CharacteristicZero> zeros;
  for (double x : found) {
    if (!zeros.empty() && std::abs(zeros.back().lambda - x) <= 1e-9 * std::max(1.0, x)) continue;
    const auto sample = assemble(graph, oriented, basis_at(x, length));
    zeros.push_back({x, kernel_dimension(sample, options.rank_tolerance)});
  }
  return zeros;
}

}  // namespace qgraph
