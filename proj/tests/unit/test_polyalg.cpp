#include <doctest.h>

#include <random>

#include "qgraph/polynomial.hpp"
#include "qgraph/roots.hpp"

using namespace qgraph;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

// (z - a) for integer a.
IntPolynomial linear(long a) { return IntPolynomial{-a, 1}; }

}  // namespace

TEST_CASE("text rendering and parsing") {
  CHECK(IntPolynomial{0, 4, 0, -8}.to_string() == "-8z^3+4z");
  CHECK(IntPolynomial{1, 0, -12, 0, 16}.to_string() == "16z^4-12z^2+1");
  CHECK(IntPolynomial{0, -1}.to_string() == "-z");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{1}.to_string() == "1");
  CHECK(parse_polynomial("-12z^3+7z+2") == IntPolynomial{2, 7, 0, -12});
  CHECK(parse_polynomial(" 16z^4 - 12z^2 + 1 ") == IntPolynomial{1, 0, -12, 0, 16});
  CHECK_THROWS_AS(parse_polynomial("48z^--32z^2-8z"), PolynomialError);
  CHECK_THROWS_AS(parse_polynomial("-16z2^5+144z^3"), PolynomialError);
  CHECK_THROWS_AS(parse_polynomial(""), PolynomialError);
}

TEST_CASE("gcd and squarefree examples") {
  const IntPolynomial psi{0, 4, 0, -8};
  CHECK(gcd(psi, psi.derivative()).degree() == 0);
  CHECK(squarefree_part(psi) == IntPolynomial{0, -1, 0, 2});
  const IntPolynomial cube = linear(1) * linear(1) * linear(1) * linear(-2);
  CHECK(squarefree_part(cube) == linear(1) * linear(-2));
  CHECK(gcd(cube, cube.derivative()) == linear(1) * linear(1));
  CHECK_THROWS_AS(gcd(IntPolynomial{}, IntPolynomial{}), PolynomialError);
  CHECK_THROWS_AS(divide_exact(IntPolynomial{1, 0, 1}, linear(1)), PolynomialError);
  CHECK(rational_polynomial_string(monic_coefficients(IntPolynomial{2, 7, 0, -12})) ==
        "z^3-7/12z-1/6");
}

TEST_CASE("multiplication, division and gcd round trips") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial a = random_poly(rng, 6, 9);
    const IntPolynomial b = random_poly(rng, 5, 9);
    const IntPolynomial c = random_poly(rng, 3, 5);
    if (b.is_zero() || c.is_zero()) continue;
    CHECK(divide_exact(a * b, b) == a);

    const auto pd = pseudo_divide(a, b);
    if (a.degree() >= b.degree()) {
      mpz_class scale = 1;
      for (int i = 0; i < a.degree() - b.degree() + 1; ++i) scale *= b.leading();
      CHECK(a * scale == pd.quotient * b + pd.remainder);
      CHECK(pd.remainder.degree() < b.degree());
    }

    const IntPolynomial g = gcd(a * c, b * c);
    if (!g.is_zero()) {
      CHECK_NOTHROW(divide_exact(a * c, g));
      CHECK_NOTHROW(divide_exact(b * c, g));
      CHECK(g.degree() >= c.degree());
      CHECK(g.leading() > 0);
    }

    const IntPolynomial p = a * a * c;
    if (p.degree() > 0) {
      const IntPolynomial sf = squarefree_part(p);
      CHECK_NOTHROW(divide_exact(p, sf));
      CHECK(gcd(sf, sf.derivative()).degree() == 0);
    }
  }
}

TEST_CASE("Sturm counts and isolation") {
  const IntPolynomial p = linear(0) * IntPolynomial{-1, 0, 2};  // 2z^3 - z
  CHECK(count_real_roots(p, -1, 1) == 3);
  CHECK(count_real_roots(p, mpq_class(1, 10), 1) == 1);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}, -10, 10) == 0);

  const auto iso = isolate_real_roots(p, -1, 1);
  REQUIRE(iso.intervals.size() == 3);
  CHECK(iso.total_multiplicity() == 3);
  for (const auto& r : iso.intervals) {
    if (r.exact()) CHECK(r.low == 0);
  }
  const mpq_class root = refine_root(p, iso.intervals.back(), mpq_class(1, 1 << 30));
  CHECK(std::abs(root.get_d() - 0.7071067811865476) < 1e-8);

  // Multiplicity from a repeated factor, including exact dyadic endpoints.
  const IntPolynomial rep = linear(1) * linear(1) * IntPolynomial{-1, 2} * IntPolynomial{-1, 2};
  const auto iso2 = isolate_real_roots(rep, -1, 1);
  REQUIRE(iso2.intervals.size() == 2);
  CHECK(iso2.intervals[0].multiplicity == 2);
  CHECK(iso2.intervals[1].multiplicity == 2);
  CHECK(iso2.total_multiplicity() == 4);

  CHECK_THROWS_AS(refine_root(p, RootInterval{-1, 1}, mpq_class(1, 100)), NotIsolating);
}
