#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qgraph/characteristic.hpp"
#include "qgraph/enumerate.hpp"
#include "qgraph/spectral.hpp"

using namespace qgraph;

namespace {

constexpr double kPi = std::numbers::pi;

IntPolynomial chebyshev(int n) {
  IntPolynomial prev{1}, cur{0, 1};
  if (n == 0) return prev;
  const IntPolynomial two_z{0, 2};
  for (int k = 1; k < n; ++k) {
    IntPolynomial next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial from_ll(const std::vector<long long>& c) {
  std::vector<mpz_class> z;
  for (long long x : c) z.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(z));
}

}  // namespace

TEST_CASE("psi examples") {
  CHECK(charpoly_psi(path_graph(5)).to_string() == "-8z^3+4z");
  CHECK(charpoly_psi(paw()).to_string() == "-12z^3+7z+2");
  CHECK(charpoly_psi(star_graph(7)).to_string() == "-7z");
  CHECK(charpoly_psi(path_graph(2)).to_string() == "1");
  CHECK(bareiss_determinant({{2, 1}, {1, 2}}) == 3);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({}) == 1);
}

TEST_CASE("psi agrees with the permutation expansion for g <= 6") {
  for (int g = 1; g <= 6; ++g) {
    for (const auto& graph : enumerate_connected(g)) {
      CHECK(charpoly_psi(graph) == from_ll(oracle::psi_leibniz(to_labeled(graph))));
    }
  }
}

TEST_CASE("cycle psi is a shifted Chebyshev polynomial") {
  for (int n = 3; n <= 8; ++n) {
    IntPolynomial expected = (chebyshev(n) - IntPolynomial{1}) * mpz_class(n % 2 ? -2 : 2);
    CHECK(charpoly_psi(cycle_graph(n)) == expected);
  }
}

TEST_CASE("phi0 vanishes on the constructed eigenvalues") {
  for (const Graph& g : {path_graph(3), star_graph(3), cycle_graph(4), paw()}) {
    const auto report = eigenvalues(g, 1.0, 20);
    for (const auto& e : report.eigenvalues) {
      if (e.lambda <= 0) continue;
      const double scale = std::pow(std::max(1.0, e.lambda), 2.0);
      CHECK(std::abs(phi0_eval(g, e.lambda)) < 1e-9 * scale);
    }
  }
}

TEST_CASE("small spectra") {
  const auto p2 = eigenvalues(path_graph(2), 1.0, 3);
  REQUIRE(p2.eigenvalues.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(p2.eigenvalues[k - 1].lambda == doctest::Approx(k * k * kPi * kPi).epsilon(1e-12));
    CHECK(p2.eigenvalues[k - 1].multiplicity == 1);
  }

  // A path on three vertices is an interval of length 2.
  const auto p3 = eigenvalues(path_graph(3), 1.0, 8);
  for (int k = 1; k <= 8; ++k) {
    CHECK(p3.nth(k) == doctest::Approx(k * k * kPi * kPi / 4).epsilon(1e-12));
  }

  const auto star = eigenvalues(star_graph(3), 1.0, 9);
  CHECK(star.delta == 2);
  CHECK(star.nth(1) == doctest::Approx(kPi * kPi / 4).epsilon(1e-12));
  CHECK(star.nth(2) == doctest::Approx(kPi * kPi).epsilon(1e-12));
  CHECK(star.nth(3) == doctest::Approx(kPi * kPi).epsilon(1e-12));
  CHECK(star.eigenvalues[1].multiplicity == 2);
  CHECK(star.eigenvalues[1].contributions.front().label() == "sine");

  // Edge length scales eigenvalues by 1/l^2.
  const auto half = eigenvalues(path_graph(3), 0.5, 4);
  CHECK(half.nth(4) == doctest::Approx(4 * p3.nth(4)).epsilon(1e-12));
  CHECK(half.total_multiplicity() >= 4);
}

TEST_CASE("cycle eigenvalue labels and the zero eigenvalue") {
  // psi(1) = 0 for every cycle, so lambda = 0 belongs to the phi0 zero set.
  const auto c4 = eigenvalues(cycle_graph(4), 1.0, 6);
  CHECK(c4.eigenvalues.front().lambda == 0.0);
  bool has_pm = false;
  for (const auto& e : c4.eigenvalues) {
    for (const auto& c : e.contributions) {
      if (c.label().back() == '+' || c.label().back() == '-') has_pm = true;
    }
  }
  CHECK(has_pm);
  CHECK(subsequence_count(c4) >= 1);
}

TEST_CASE("characteristic matrix zeros match the construction") {
  for (const Graph& g : {path_graph(2), path_graph(3), star_graph(3), paw()}) {
    ZeroSearchOptions opt;
    opt.lambda_max = 120.0;
    const auto zeros = characteristic_zeros(g, 1.0, opt);
    const auto report = eigenvalues_below(g, 1.0, opt.lambda_max);
    std::vector<const Eigenvalue*> positive;
    for (const auto& e : report.eigenvalues) {
      if (e.lambda > 0 && e.lambda < opt.lambda_max) positive.push_back(&e);
    }
    REQUIRE(zeros.size() == positive.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      CHECK(zeros[i].lambda == doctest::Approx(positive[i]->lambda).epsilon(1e-6));
      CHECK(zeros[i].kernel_dimension == positive[i]->multiplicity);
    }
  }
  const auto sample = characteristic_matrix(paw(), 3.0);
  CHECK(sample.entries.rows() == 8);
  CHECK(sample.entries.cols() == 8);
  CHECK(std::abs(characteristic_determinant(star_graph(3), kPi * kPi)) < 1e-9);
}

TEST_CASE("Weyl ratio") {
  const auto report = eigenvalues(path_graph(3), 1.0, 400);
  const auto w = weyl_ratio(report, 2);
  CHECK(std::abs(w.relative_error()) < 0.02);
  CHECK_THROWS_AS(weyl_ratio(eigenvalues(path_graph(3), 1.0, 50), 2), TooFewEigenvalues);
}
