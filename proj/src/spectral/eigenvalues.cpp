#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "qgraph/roots.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Candidate {
  double phase = 0.0;
  std::vector<Contribution> contributions;
};

std::vector<PsiRoot> psi_roots(const IntPolynomial& psi) {
  std::vector<PsiRoot> roots;
  if (psi.degree() < 1) return roots;
  const RootIsolation isolation = isolate_real_roots(psi, -1, 1);
  if (isolation.total_multiplicity() != psi.degree()) {
    throw InternalInconsistency("psi = " + psi.to_string() + " has " +
                                std::to_string(isolation.total_multiplicity()) +
                                " roots in [-1, 1] counted with multiplicity, expected " +
                                std::to_string(psi.degree()));
  }
  const mpq_class eps(mpz_class(1), mpz_class(1) << 80);
  for (const auto& r : isolation.intervals) {
    PsiRoot root;
    root.multiplicity = r.multiplicity;
    root.low = r.low;
    root.high = r.high;
    root.value = r.exact() ? r.low.get_d() : refine_root(psi, r, eps).get_d();
    roots.push_back(root);
  }
  return roots;
}

bool at_plus_one(const PsiRoot& r) { return r.low == r.high && r.low == 1; }
bool at_minus_one(const PsiRoot& r) { return r.low == r.high && r.low == -1; }

// Candidates with phase in [2 pi k, 2 pi (k + 1)), ascending.
std::vector<Candidate> period_candidates(const std::vector<PsiRoot>& roots, int delta, long k) {
  const double base = kTwoPi * static_cast<double>(k);
  Candidate zero_point{base, {}};
  Candidate pi_point{base + std::numbers::pi, {}};
  std::vector<Candidate> out;

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& r = roots[i];
    const int index = static_cast<int>(i) + 1;
    if (at_plus_one(r)) {
      // lambda = 0 is reported separately, with its order in lambda.
      if (k > 0) zero_point.contributions.push_back({Branch::PsiRoot, index, 0, 2 * r.multiplicity});
    } else if (at_minus_one(r)) {
      pi_point.contributions.push_back({Branch::PsiRoot, index, 0, 2 * r.multiplicity});
    } else {
      const double theta = std::acos(r.value);
      out.push_back({base + theta, {{Branch::PsiRoot, index, +1, r.multiplicity}}});
      out.push_back({base + kTwoPi - theta, {{Branch::PsiRoot, index, -1, r.multiplicity}}});
    }
  }
  if (delta > 0) {
    if (k > 0) zero_point.contributions.push_back({Branch::Sine, 0, 0, delta});
    pi_point.contributions.push_back({Branch::Sine, 0, 0, delta});
  }
  if (!zero_point.contributions.empty()) out.push_back(std::move(zero_point));
  if (!pi_point.contributions.empty()) out.push_back(std::move(pi_point));
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.phase < b.phase; });
  return out;
}

SpectrumReport build_report(const Graph& graph, double length, int requested,
                            const std::function<bool(const SpectrumReport&, double)>& done) {
  if (!(length > 0.0)) throw std::invalid_argument("edge length must be positive");
  SpectrumReport report;
  report.length = length;
  report.requested = requested;
  report.delta = class_key(graph).delta;
  report.psi = charpoly_psi(graph);
  report.roots = psi_roots(report.psi);

  if (report.delta == 0 && report.roots.empty()) {
    throw NoRootsInRange("phi0 has no zeros: psi is constant and delta = 0");
  }

  // lambda = 0 iff psi(1) = 0.
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    if (at_plus_one(report.roots[i])) {
      const int m = report.roots[i].multiplicity;
      report.eigenvalues.push_back(
          {0.0, 0.0, m, {{Branch::PsiRoot, static_cast<int>(i) + 1, 0, m}}});
    }
  }
  for (long k = 0;; ++k) {
    for (auto& c : period_candidates(report.roots, report.delta, k)) {
      if (done(report, c.phase)) return report;
      int m = 0;
      for (const auto& contribution : c.contributions) m += contribution.multiplicity;
      const double lambda = (c.phase / length) * (c.phase / length);
      report.eigenvalues.push_back({lambda, c.phase, m, std::move(c.contributions)});
    }
  }
}

}  // namespace

std::string Contribution::label() const {
  if (branch == Branch::Sine) return "sine";
  std::string out = "alpha" + std::to_string(root_index);
  if (sign > 0) out += '+';
  if (sign < 0) out += '-';
  return out;
}

int SpectrumReport::total_multiplicity() const {
  int total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

double SpectrumReport::nth(int n) const {
  int seen = 0;
  for (const auto& e : eigenvalues) {
    seen += e.multiplicity;
    if (seen >= n) return e.lambda;
  }
  throw std::out_of_range("report holds " + std::to_string(seen) + " eigenvalues, asked for #" +
                          std::to_string(n));
}

SpectrumReport eigenvalues(const Graph& graph, double length, int count) {
  if (count < 1) throw std::invalid_argument("eigenvalue count must be at least 1");
  return build_report(graph, length, count, [count](const SpectrumReport& r, double) {
    return r.total_multiplicity() >= count;
  });
}

SpectrumReport eigenvalues_below(const Graph& graph, double length, double lambda_max) {
  const double phase_max = std::sqrt(std::max(lambda_max, 0.0)) * length;
  SpectrumReport report = build_report(
      graph, length, 0, [phase_max](const SpectrumReport&, double phase) { return phase > phase_max; });
  report.requested = report.total_multiplicity();
  return report;
}

int subsequence_count(const SpectrumReport& report) {
  std::map<std::string, int> weight;
  for (const auto& e : report.eigenvalues) {
    for (const auto& c : e.contributions) {
      // Coinciding +- branches at alpha = +-1 count as two subsequences.
      const int m = (c.branch == Branch::PsiRoot && c.sign == 0 && e.lambda > 0.0)
                        ? c.multiplicity / 2
                        : c.multiplicity;
      if (c.branch == Branch::PsiRoot && c.sign == 0) {
        weight[c.label() + "+"] = std::max(weight[c.label() + "+"], m);
        weight[c.label() + "-"] = std::max(weight[c.label() + "-"], m);
      } else {
        weight[c.label()] = std::max(weight[c.label()], m);
      }
    }
  }
  int total = 0;
  for (const auto& [label, m] : weight) total += m;
  return total;
}

WeylRatio weyl_ratio(const SpectrumReport& report, int edges) {
  const int n = report.requested;
  if (n < kMinWeylCount) {
    throw TooFewEigenvalues("Weyl ratio needs at least " + std::to_string(kMinWeylCount) +
                            " eigenvalues, report has " + std::to_string(n));
  }
  WeylRatio out;
  out.ratio = report.nth(n) / (static_cast<double>(n) * n);
  const double gl = edges * report.length;
  out.limit = std::numbers::pi * std::numbers::pi / (gl * gl);
  return out;
}

}  // namespace qgraph
