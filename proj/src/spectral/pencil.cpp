#include <cmath>

#include "qgraph/spectral.hpp"

namespace qgraph {

DirichletPencil dirichlet_pencil(const Graph& graph) {
  DirichletPencil pencil;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.is_pendant(v)) pencil.interior.push_back(v);
  }
  const auto n = pencil.interior.size();
  pencil.adjacency.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    pencil.degrees.push_back(graph.degree(pencil.interior[i]));
    for (std::size_t j = 0; j < n; ++j) {
      pencil.adjacency[i][j] = graph.adjacent(pencil.interior[i], pencil.interior[j]) ? 1 : 0;
    }
  }
  return pencil;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class value = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial charpoly_psi(const DirichletPencil& pencil) {
  const int n = pencil.dimension();
  if (n == 0) return IntPolynomial{1};

  // Samples det(-k Dhat + Ahat) at k = 0..n, then Newton divided differences
  // over the rationals and expansion into the monomial basis.
  std::vector<mpq_class> divided(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = pencil.adjacency[i][j];
      m[i][i] -= k * pencil.degrees[i];
    }
    divided[static_cast<std::size_t>(k)] = bareiss_determinant(std::move(m));
  }
  for (int level = 1; level <= n; ++level) {
    for (int k = n; k >= level; --k) {
      auto& d = divided[static_cast<std::size_t>(k)];
      d = (d - divided[static_cast<std::size_t>(k - 1)]) / level;
    }
  }
  // Horner on the Newton form: c_n, then multiply by (z - k) and add c_k.
  std::vector<mpq_class> coeffs{divided[static_cast<std::size_t>(n)]};
  for (int k = n - 1; k >= 0; --k) {
    std::vector<mpq_class> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * k;
    }
    next[0] += divided[static_cast<std::size_t>(k)];
    coeffs = std::move(next);
  }

  std::vector<mpz_class> integral;
  integral.reserve(coeffs.size());
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) {
      throw InternalInconsistency("psi interpolation produced the non-integer coefficient " +
                                  c.get_str());
    }
    integral.push_back(c.get_num());
  }
  IntPolynomial psi(std::move(integral));
  if (psi.degree() != n) {
    throw InternalInconsistency("psi has degree " + std::to_string(psi.degree()) +
                                ", expected pencil dimension " + std::to_string(n));
  }
  return psi;
}

IntPolynomial charpoly_psi(const Graph& graph) { return charpoly_psi(dirichlet_pencil(graph)); }

double phi0_eval(const IntPolynomial& psi, int delta, double lambda, double length) {
  double sine_factor = length;
  double cosine = 1.0;
  if (lambda > 0.0) {
    const double omega = std::sqrt(lambda);
    sine_factor = std::sin(omega * length) / omega;
    cosine = std::cos(omega * length);
  } else if (lambda < 0.0) {
    const double mu = std::sqrt(-lambda);
    sine_factor = std::sinh(mu * length) / mu;
    cosine = std::cosh(mu * length);
  }
  return std::pow(sine_factor, delta) * psi.evaluate(cosine);
}

double phi0_eval(const Graph& graph, double lambda, double length) {
  return phi0_eval(charpoly_psi(graph), class_key(graph).delta, lambda, length);
}

}  // namespace qgraph
