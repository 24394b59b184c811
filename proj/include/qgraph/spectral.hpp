#pragma once

// Spectrum of the zero-potential Sturm-Liouville problem on an equilateral
// graph: Dirichlet conditions at pendant vertices, continuity plus Kirchhoff
// at interior vertices. The characteristic function is
//
//   phi0(lambda) = (sin(sqrt(lambda) l) / sqrt(lambda))^delta * psi(cos(sqrt(lambda) l)),
//   psi(z)       = det(-z Dhat + Ahat),
//
// where Dhat, Ahat are the degree and adjacency matrices restricted to the
// interior (non-pendant) vertices and delta = g - p + r.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"

namespace qgraph {

/// Raised when an exact computation contradicts an identity that must hold;
/// it signals a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class TooFewEigenvalues : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoRootsInRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DirichletPencil {
  std::vector<Vertex> interior;          // ascending original labels
  std::vector<std::vector<int>> adjacency;  // induced 0/1 submatrix
  std::vector<int> degrees;              // full-graph degrees of interior vertices

  int dimension() const { return static_cast<int>(interior.size()); }
};

DirichletPencil dirichlet_pencil(const Graph& graph);

/// Fraction-free Gaussian elimination; exact for any integer matrix.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> matrix);

/// det(-z Dhat + Ahat) by evaluation at z = 0..n and exact interpolation.
/// The empty pencil gives the constant 1.
IntPolynomial charpoly_psi(const Graph& graph);
IntPolynomial charpoly_psi(const DirichletPencil& pencil);

/// phi0 at real lambda (hyperbolic continuation for lambda < 0, the limit
/// sin(sqrt(lambda) l)/sqrt(lambda) -> l at lambda = 0).
double phi0_eval(const IntPolynomial& psi, int delta, double lambda, double length = 1.0);
double phi0_eval(const Graph& graph, double lambda, double length = 1.0);

enum class Branch { PsiRoot, Sine };

/// One factor of phi0 vanishing at an eigenvalue.
struct Contribution {
  Branch branch = Branch::Sine;
  int root_index = 0;  // 1-based index into SpectrumReport::roots (PsiRoot only)
  int sign = 0;        // +1 / -1 for the +-arccos branch; 0 where they coincide
  int multiplicity = 0;

  /// "alpha2+", "alpha2-", "alpha1" (root at +-1) or "sine".
  std::string label() const;
};

/// A real root alpha of psi; all of them lie in [-1, 1].
struct PsiRoot {
  double value = 0.0;
  int multiplicity = 1;
  mpq_class low;
  mpq_class high;
};

struct Eigenvalue {
  double lambda = 0.0;
  double phase = 0.0;  // t = sqrt(lambda) * l
  int multiplicity = 0;
  std::vector<Contribution> contributions;
};

/// Leading eigenvalues, ascending, grouped by value. Multiplicity is the
/// order of the zero of phi0 in t = sqrt(lambda) l, except at lambda = 0
/// where it is the order in lambda.
struct SpectrumReport {
  double length = 1.0;
  int requested = 0;
  int delta = 0;
  IntPolynomial psi;
  std::vector<PsiRoot> roots;
  std::vector<Eigenvalue> eigenvalues;

  int total_multiplicity() const;
  /// The n-th eigenvalue (1-based) counted with multiplicity.
  double nth(int n) const;
};

/// First `count` eigenvalues counted with multiplicity; the last group is
/// kept whole. Each interior root alpha of psi with multiplicity m yields
/// t = 2 pi k +- arccos(alpha) (order m); the sine factor yields t = pi k
/// (order delta); roots at +-1 yield order 2m at t = 0 or pi mod 2 pi.
SpectrumReport eigenvalues(const Graph& graph, double length, int count);

/// Every eigenvalue with lambda <= lambda_max.
SpectrumReport eigenvalues_below(const Graph& graph, double length, double lambda_max);

/// Distinct branch labels weighted by their multiplicity; for a tree whose
/// report covers a full period this is 2p - r - 1.
int subsequence_count(const SpectrumReport& report);

struct WeylRatio {
  double ratio = 0.0;  // lambda_N / N^2
  double limit = 0.0;  // pi^2 / (g^2 l^2)

  double relative_error() const { return (ratio - limit) / limit; }
};

inline constexpr int kMinWeylCount = 100;

/// Requires report.requested >= 100 (TooFewEigenvalues otherwise).
WeylRatio weyl_ratio(const SpectrumReport& report, int edges);

}  // namespace qgraph
