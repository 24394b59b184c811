#include "qgraph/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace qgraph {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& value) {
  return IntPolynomial(std::vector<mpz_class>{value});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& coefficient, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPolynomial::leading() const {
  if (is_zero()) throw PolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class divisor = content();
  if (leading() < 0) divisor = -divisor;
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  // den^n p(num/den) = sum c_i num^i den^(n-i); den > 0 keeps the sign.
  if (is_zero()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

namespace {

template <typename Coefficient>
std::string format_terms(const std::vector<Coefficient>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Coefficient& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    if (i == 0 || magnitude != 1) os << magnitude;
    if (i >= 1) os << 'z';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return first ? std::string("0") : os.str();
}

}  // namespace

std::string IntPolynomial::to_string() const { return format_terms(coeffs_); }

std::string rational_polynomial_string(const std::vector<mpq_class>& coefficients) {
  return format_terms(coefficients);
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw PolynomialError("empty polynomial text");
  if (s == "0") return {};

  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw PolynomialError("cannot parse polynomial \"" + std::string(text) + "\": " + why);
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::string magnitude = digits();
    mpz_class c = magnitude.empty() ? mpz_class(1) : mpz_class(magnitude);
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = digits();
        if (e.empty()) fail("missing exponent at offset " + std::to_string(pos));
        exponent = std::stoi(e);
      }
    } else if (magnitude.empty()) {
      fail("empty term at offset " + std::to_string(pos));
    }
    if (coeffs.size() <= static_cast<std::size_t>(exponent)) {
      coeffs.resize(static_cast<std::size_t>(exponent) + 1);
    }
    coeffs[static_cast<std::size_t>(exponent)] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PolynomialError("pseudo-division by the zero polynomial");
  if (a.degree() < b.degree()) return {{}, a};
  const int db = b.degree();
  const mpz_class& lc = b.leading();
  std::vector<mpz_class> r = a.coefficients();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const mpz_class top = r[static_cast<std::size_t>(k)];
    for (auto& c : q) c *= lc;
    q[static_cast<std::size_t>(k - db)] += top;
    for (auto& c : r) c *= lc;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(k - db + i)] -= top * b.coefficients()[static_cast<std::size_t>(i)];
    }
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PolynomialError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PolynomialError("inexact polynomial division");
  const int db = b.degree();
  const mpz_class& lc = b.leading();
  std::vector<mpz_class> r = a.coefficients();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    mpz_class& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw PolynomialError("inexact polynomial division");
    }
    mpz_class factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = factor;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(k - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& c : r) {
    if (c != 0) throw PolynomialError("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw PolynomialError("gcd of two zero polynomials");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();

  IntPolynomial f = a.primitive_part();
  IntPolynomial h = b.primitive_part();
  if (f.degree() < h.degree()) std::swap(f, h);

  // Subresultant PRS: divide each pseudo-remainder by g * psi^delta so the
  // coefficients stay bounded by the subresultant determinants.
  mpz_class g = 1;
  mpz_class psi = 1;
  while (!h.is_zero() && h.degree() > 0) {
    const int delta = f.degree() - h.degree();
    IntPolynomial r = pseudo_divide(f, h).remainder;
    if (r.is_zero()) break;
    mpz_class divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= psi;
    std::vector<mpz_class> scaled = r.coefficients();
    for (auto& c : scaled) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    f = std::move(h);
    h = IntPolynomial(std::move(scaled));
    g = f.leading();
    // psi <- g^delta / psi^(delta-1)
    mpz_class numerator = 1;
    for (int i = 0; i < delta; ++i) numerator *= g;
    mpz_class denominator = 1;
    for (int i = 1; i < delta; ++i) denominator *= psi;
    mpz_divexact(psi.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  }
  if (h.is_zero()) return f.primitive_part();
  if (h.degree() == 0) return IntPolynomial{1};
  return h.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw PolynomialError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial{1};
  return divide_exact(p.primitive_part(), gcd(p, p.derivative())).primitive_part();
}

std::vector<mpq_class> monic_coefficients(const IntPolynomial& p) {
  const mpz_class& lc = p.leading();
  std::vector<mpq_class> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    mpq_class q(c, lc);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace qgraph
