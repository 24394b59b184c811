#include <algorithm>
#include <map>

#include "qgraph/graph6.hpp"
#include "qgraph/parallel.hpp"
#include "qgraph/printed_tables.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

namespace {

struct Candidate {
  std::string graph6;
  std::string psi;
  std::vector<std::string> terms;
  bool claimed = false;
};

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Exact:
      return "exact";
    case Verdict::TypoCorrected:
      return "typo-corrected";
    case Verdict::Unmatched:
      return "unmatched";
  }
  return "unmatched";
}

std::size_t TableCheck::count(Verdict verdict) const {
  return static_cast<std::size_t>(std::count_if(
      diffs.begin(), diffs.end(), [&](const TableDiff& d) { return d.verdict == verdict; }));
}

std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool sign = c == '+' || c == '-';
    if (sign && !current.empty() && text[i - 1] != '^') {
      terms.push_back(current);
      current.clear();
    }
    current += c;
  }
  if (!current.empty()) terms.push_back(current);
  // A leading '+' carries no information.
  for (auto& t : terms) {
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
  }
  return terms;
}

std::size_t term_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool within_one_term(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return term_distance(a, b) <= 1;
}

TableCheck verify_printed_tables(const EnumerateOptions& options) {
  const auto printed = printed_polynomials();
  int g_min = printed.front().edges;
  int g_max = g_min;
  for (const auto& p : printed) {
    g_min = std::min(g_min, p.edges);
    g_max = std::max(g_max, p.edges);
  }

  TableCheck check;
  std::map<ClassKey, std::vector<Candidate>> classes;
  const int workers = resolve_workers(options.workers);
  for (int g = g_min; g <= g_max; ++g) {
    const auto graphs = enumerate_connected(g, {options.max_edges, workers});
    std::vector<std::pair<ClassKey, Candidate>> computed(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i, int) {
      const std::string psi = charpoly_psi(graphs[i]).to_string();
      computed[i] = {class_key(graphs[i]), {to_graph6(graphs[i]), psi, split_terms(psi)}};
    });
    for (auto& [key, cand] : computed) classes[key].push_back(std::move(cand));
    check.enumerated_per_edges[g] = graphs.size();
  }
  for (const auto& p : printed) ++check.printed_per_edges[p.edges];

  check.diffs.resize(printed.size());
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& p = printed[i];
    check.diffs[i] = {{p.edges, p.delta}, p.index, std::string(p.text), "", "", Verdict::Unmatched,
                      false};
  }

  // Exact pass first so that typo corrections cannot steal a graph that a
  // later entry reproduces verbatim.
  for (auto& d : check.diffs) {
    auto& cands = classes[d.key];
    Candidate* hit = nullptr;
    for (auto& c : cands) {
      if (c.psi != d.printed) continue;
      if (!hit || (hit->claimed && !c.claimed)) hit = &c;
    }
    if (!hit) continue;
    d.duplicate = hit->claimed;
    hit->claimed = true;
    d.computed = hit->psi;
    d.graph6 = hit->graph6;
    d.verdict = Verdict::Exact;
  }

  for (auto& d : check.diffs) {
    if (d.verdict == Verdict::Exact) continue;
    const auto terms = split_terms(d.printed);
    Candidate* best = nullptr;
    std::size_t best_distance = 0;
    for (auto& c : classes[d.key]) {
      const std::size_t dist = term_distance(terms, c.terms);
      const bool better = !best || std::make_pair(c.claimed, dist) <
                                       std::make_pair(best->claimed, best_distance);
      if (better) {
        best = &c;
        best_distance = dist;
      }
    }
    if (!best) continue;
    d.computed = best->psi;
    d.graph6 = best->graph6;
    if (best_distance <= 1 && !best->claimed) {
      best->claimed = true;
      d.verdict = Verdict::TypoCorrected;
    }
  }

  for (const auto& [key, cands] : classes) {
    check.class_counts[key] = cands.size();
    for (const auto& c : cands) {
      if (!c.claimed) check.unclaimed.push_back({key, c.graph6, c.psi});
    }
  }

  for (const auto& s : stated_counts()) {
    std::size_t enumerated = 0;
    for (const auto& [key, cands] : classes) {
      if (key.edges == s.edges && (!s.delta || key.delta == *s.delta)) enumerated += cands.size();
    }
    if (enumerated != static_cast<std::size_t>(s.count)) {
      check.count_discrepancies.push_back({s.edges, s.delta, s.count, enumerated});
    }
  }
  return check;
}

}  // namespace qgraph
