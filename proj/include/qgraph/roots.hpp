#pragma once

// Real-root isolation with Sturm sequences and exact dyadic bisection.

#include <gmpxx.h>

#include <vector>

#include "qgraph/polynomial.hpp"

namespace qgraph {

class NotIsolating : public PolynomialError {
 public:
  using PolynomialError::PolynomialError;
};

/// One real root: exactly `low` when low == high, otherwise the single
/// distinct root in the open interval (low, high).
struct RootInterval {
  mpq_class low;
  mpq_class high;
  int multiplicity = 1;

  bool exact() const { return low == high; }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // ascending, pairwise disjoint

  int distinct() const { return static_cast<int>(intervals.size()); }
  int total_multiplicity() const;
};

/// p, -p', then negated pseudo-remainders scaled by positive factors only.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Sign changes of the chain at x, zeros skipped.
int sign_variations(const std::vector<IntPolynomial>& chain, const mpq_class& x);

/// Distinct real roots of p in the closed interval [lo, hi].
int count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

/// Isolates every distinct real root of p in [lo, hi]. Multiplicities come
/// from the chain G0 = p, G(k+1) = gcd(Gk, Gk'): a root has multiplicity m
/// iff it is a root of G0..G(m-1) and not of Gm.
RootIsolation isolate_real_roots(const IntPolynomial& p, const mpq_class& lo,
                                 const mpq_class& hi);

/// Rational x with |x - root| <= eps for the root isolated by `interval`.
/// Returns the root itself if a bisection point hits it exactly.
/// Throws NotIsolating if the interval holds other than one distinct root.
mpq_class refine_root(const IntPolynomial& p, const RootInterval& interval, const mpq_class& eps);

}  // namespace qgraph
