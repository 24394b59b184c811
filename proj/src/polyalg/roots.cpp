#include "qgraph/roots.hpp"

#include <algorithm>

namespace qgraph {

namespace {

// Distinct roots of the squarefree head of `chain` in (a, b]. When a is a
// root, the sign just right of a equals sign(p'(a)), so p(a) drops out.
int count_half_open(const std::vector<IntPolynomial>& chain, const mpq_class& a,
                    const mpq_class& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

class Isolator {
 public:
  explicit Isolator(const IntPolynomial& squarefree)
      : sf_(squarefree), chain_(sturm_chain(squarefree)) {}

  void run(const mpq_class& lo, const mpq_class& hi, std::vector<RootInterval>& out) const {
    if (sf_.sign_at(lo) == 0) out.push_back({lo, lo, 1});
    if (lo == hi) return;
    bisect(lo, hi, count_half_open(chain_, lo, hi), out);
  }

 private:
  // Roots in (lo, hi], `count` of them, appended in ascending order.
  void bisect(const mpq_class& lo, const mpq_class& hi, int count,
              std::vector<RootInterval>& out) const {
    if (count == 0) return;
    if (count == 1) {
      if (sf_.sign_at(hi) == 0) {
        out.push_back({hi, hi, 1});
      } else {
        out.push_back({lo, hi, 1});
      }
      return;
    }
    mpq_class mid = (lo + hi) / 2;
    const int left = count_half_open(chain_, lo, mid);
    bisect(lo, mid, left, out);
    bisect(mid, hi, count - left, out);
  }

  const IntPolynomial& sf_;
  std::vector<IntPolynomial> chain_;
};

}  // namespace

int RootIsolation::total_multiplicity() const {
  int total = 0;
  for (const auto& r : intervals) total += r.multiplicity;
  return total;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw PolynomialError("Sturm chain of the zero polynomial");
  std::vector<IntPolynomial> chain{p};
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_divide(a, b).remainder;
    if (r.is_zero()) break;
    // prem = lc(b)^(da-db+1) * a mod b; undo a negative scale factor.
    const int power = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && power % 2 == 1;
    IntPolynomial next = flip ? r : -r;
    const mpz_class content = next.content();
    std::vector<mpz_class> scaled = next.coefficients();
    for (auto& c : scaled) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    chain.emplace_back(std::move(scaled));
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const mpq_class& x) {
  int variations = 0;
  int previous = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

int count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.is_zero()) throw PolynomialError("root count of the zero polynomial");
  if (hi < lo) return 0;
  const IntPolynomial sf = squarefree_part(p);
  const auto chain = sturm_chain(sf);
  return (sf.sign_at(lo) == 0 ? 1 : 0) + count_half_open(chain, lo, hi);
}

RootIsolation isolate_real_roots(const IntPolynomial& p, const mpq_class& lo,
                                 const mpq_class& hi) {
  if (p.is_zero()) throw PolynomialError("root isolation of the zero polynomial");
  RootIsolation result;
  if (hi < lo || p.degree() == 0) return result;

  const IntPolynomial sf = squarefree_part(p);
  Isolator(sf).run(lo, hi, result.intervals);

  // Multiplicity chain: squarefree parts of G1, G2, ... while nonconstant.
  std::vector<std::pair<IntPolynomial, std::vector<IntPolynomial>>> levels;
  IntPolynomial g = gcd(p, p.derivative());
  while (g.degree() > 0) {
    IntPolynomial level_sf = squarefree_part(g);
    auto chain = sturm_chain(level_sf);
    levels.emplace_back(std::move(level_sf), std::move(chain));
    g = gcd(g, g.derivative());
  }
  for (auto& root : result.intervals) {
    for (const auto& [level_sf, chain] : levels) {
      const bool vanishes = root.exact()
                                ? level_sf.sign_at(root.low) == 0
                                : count_half_open(chain, root.low, root.high) > 0;
      if (!vanishes) break;
      ++root.multiplicity;
    }
  }
  return result;
}

mpq_class refine_root(const IntPolynomial& p, const RootInterval& interval, const mpq_class& eps) {
  if (p.is_zero()) throw PolynomialError("root refinement of the zero polynomial");
  if (interval.exact()) {
    if (p.sign_at(interval.low) != 0) throw NotIsolating("exact root candidate is not a root");
    return interval.low;
  }
  if (eps <= 0) throw PolynomialError("refinement tolerance must be positive");
  const IntPolynomial sf = squarefree_part(p);
  const auto chain = sturm_chain(sf);
  mpq_class lo = interval.low;
  mpq_class hi = interval.high;
  if (hi < lo) std::swap(lo, hi);
  const int inside = count_half_open(chain, lo, hi) - (sf.sign_at(hi) == 0 ? 1 : 0);
  if (inside != 1) {
    throw NotIsolating("interval contains " + std::to_string(inside) +
                       " distinct roots, expected exactly 1");
  }
  while (hi - lo > 2 * eps) {
    mpq_class mid = (lo + hi) / 2;
    if (sf.sign_at(mid) == 0) return mid;
    if (count_half_open(chain, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace qgraph
