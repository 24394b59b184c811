#pragma once

// Dense univariate polynomials in z over arbitrary-precision integers.

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgraph {

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Ascending coefficients; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& value);
  static IntPolynomial monomial(const mpz_class& coefficient, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^i; zero beyond the degree.
  mpz_class coefficient(int i) const;
  const mpz_class& leading() const;

  IntPolynomial derivative() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;
  /// Exact sign of p(x) without forming rationals.
  int sign_at(const mpq_class& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Descending-degree text, e.g. "-8z^3+4z", "16z^4-12z^2+1", "-z".
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Parses the text produced by IntPolynomial::to_string (whitespace allowed).
IntPolynomial parse_polynomial(std::string_view text);

struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a over the integers; throws PolynomialError otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient via the subresultant
/// pseudo-remainder sequence. Not both arguments may be zero.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// primitive_part(p / gcd(p, p')): same distinct roots, all simple.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Exact rational coefficients of p / lc(p).
std::vector<mpq_class> monic_coefficients(const IntPolynomial& p);

/// Text form of a rational polynomial, e.g. "z^3-7/12z-1/6".
std::string rational_polynomial_string(const std::vector<mpq_class>& coefficients);

}  // namespace qgraph
