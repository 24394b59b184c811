#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

namespace {

using Rows = std::vector<std::uint32_t>;

Rows rows_of(const Labeled& g) {
  Rows rows(static_cast<std::size_t>(g.p), 0);
  for (auto [u, v] : g.edges) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
  return rows;
}

std::uint64_t pack_rows(const Rows& rows, const std::vector<int>& order) {
  const int p = static_cast<int>(order.size());
  std::uint64_t bits = 0;
  for (int j = 1; j < p; ++j) {
    for (int i = 0; i < j; ++i) bits = (bits << 1) | ((rows[order[i]] >> order[j]) & 1U);
  }
  return bits;
}

int degree(const Rows& rows, int v) { return __builtin_popcount(rows[v]); }

// Calls visit(order) for every order listing vertices by non-increasing
// degree.
template <typename Visit>
void degree_orders(const Rows& rows, Visit visit) {
  const int p = static_cast<int>(rows.size());
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree(rows, a) > degree(rows, b); });
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < p;) {
    int j = i;
    while (j < p && degree(rows, order[j]) == degree(rows, order[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [a, b] : groups) std::sort(order.begin() + a, order.begin() + b);

  // Odometer over the per-group permutations.
  while (true) {
    visit(order);
    std::size_t k = 0;
    for (; k < groups.size(); ++k) {
      auto [a, b] = groups[k];
      if (std::next_permutation(order.begin() + a, order.begin() + b)) break;
    }
    if (k == groups.size()) return;
  }
}

}  // namespace

std::uint64_t pack(const Labeled& g) {
  std::vector<int> identity(static_cast<std::size_t>(g.p));
  std::iota(identity.begin(), identity.end(), 0);
  return pack_rows(rows_of(g), identity);
}

std::uint64_t canonical(const Labeled& g) {
  const Rows rows = rows_of(g);
  std::uint64_t best = 0;
  degree_orders(rows, [&](const std::vector<int>& order) {
    best = std::max(best, pack_rows(rows, order));
  });
  return best;
}

std::uint64_t canonical_all_permutations(const Labeled& g) {
  const Rows rows = rows_of(g);
  std::vector<int> order(static_cast<std::size_t>(g.p));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = 0;
  do {
    best = std::max(best, pack_rows(rows, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool connected(const Labeled& g) {
  if (g.p == 0) return true;
  const Rows rows = rows_of(g);
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.p; ++v) {
      if ((frontier >> v) & 1U) next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.p == 32 ? ~0U : (1U << g.p) - 1);
}

ClassCounts enumerate_connected(int g) {
  if (g < 1 || g > 10) throw std::invalid_argument("oracle supports 1 <= g <= 10");
  ClassCounts out;
  for (int p = 2; p <= g + 1; ++p) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < p; ++j) {
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    if (static_cast<int>(pairs.size()) < g) continue;

    std::unordered_set<std::uint64_t> seen;
    std::vector<int> deg(p, 0);
    Labeled current{p, {}};
    auto leaf = [&] {
      for (int v = 0; v + 1 < p; ++v) {
        if (deg[v] < deg[v + 1]) return;
      }
      if (deg[p - 1] == 0 || !connected(current)) return;
      if (seen.count(pack(current))) return;
      const Rows rows = rows_of(current);
      std::uint64_t best = 0;
      degree_orders(rows, [&](const std::vector<int>& order) {
        const std::uint64_t image = pack_rows(rows, order);
        seen.insert(image);
        best = std::max(best, image);
      });
      int r = 0;
      for (int v = 0; v < p; ++v) r += deg[v] == 1;
      out.forms.insert({p, best});
      ++out.by_vertices[p];
      ++out.by_class[{g, g - p + r}];
      ++out.total;
    };
    auto choose = [&](auto&& self, std::size_t start, int left) -> void {
      if (left == 0) {
        leaf();
        return;
      }
      for (std::size_t k = start; k + static_cast<std::size_t>(left) <= pairs.size(); ++k) {
        auto [u, v] = pairs[k];
        ++deg[u];
        ++deg[v];
        current.edges.push_back(pairs[k]);
        self(self, k + 1, left - 1);
        current.edges.pop_back();
        --deg[u];
        --deg[v];
      }
    };
    choose(choose, 0, g);
  }
  return out;
}

std::vector<long long> psi_leibniz(const Labeled& g) {
  const Rows rows = rows_of(g);
  std::vector<int> interior;
  for (int v = 0; v < g.p; ++v) {
    if (degree(rows, v) > 1) interior.push_back(v);
  }
  const int n = static_cast<int>(interior.size());
  std::vector<long long> total(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Entry (i, perm[i]) is -deg*z on the diagonal, else 0 or 1.
    long long coeff = 1;
    int zpow = 0;
    for (int i = 0; i < n && coeff != 0; ++i) {
      const int a = interior[i], b = interior[perm[i]];
      if (i == perm[i]) {
        coeff *= -degree(rows, a);
        ++zpow;
      } else if (!((rows[a] >> b) & 1U)) {
        coeff = 0;
      }
    }
    if (coeff == 0) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total[zpow] += (inversions % 2 ? -coeff : coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

}  // namespace oracle
