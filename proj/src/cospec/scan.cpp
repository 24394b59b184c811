#include <algorithm>
#include <map>
#include <tuple>

#include "qgraph/cospec.hpp"
#include "qgraph/graph6.hpp"
#include "qgraph/parallel.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

namespace {

struct Entry {
  ClassKey key;
  std::string graph6;
  std::string psi;
  std::string set_key;
  std::string multiset_key;
};

}  // namespace

CospectralReport scan(int min_edges, int max_edges, const ScanOptions& options) {
  if (min_edges < 1 || max_edges < min_edges || max_edges > options.max_edges) {
    throw LimitExceeded("scan range [" + std::to_string(min_edges) + ", " +
                        std::to_string(max_edges) + "] outside [1, " +
                        std::to_string(options.max_edges) + "]");
  }
  const int workers = resolve_workers(options.workers);
  CospectralReport report;
  report.min_edges = min_edges;
  report.max_edges = max_edges;
  report.mode = options.mode;

  for (int g = min_edges; g <= max_edges; ++g) {
    const auto graphs = enumerate_connected(g, {options.max_edges, workers});
    std::vector<Entry> entries(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i, int) {
      const Graph& graph = graphs[i];
      const IntPolynomial psi = charpoly_psi(graph);
      const ClassKey key = class_key(graph);
      const SpectralSignature sig = signature(psi, key.delta);
      entries[i] = {key, to_graph6(graph), psi.to_string(), sig.key(CompareMode::Set),
                    sig.key(CompareMode::Multiset)};
    });

    // Merge phase: bucket by (class, exact key); any bucket of two or more is a collision.
    std::map<ClassKey, std::size_t> counts;
    std::map<std::pair<ClassKey, std::string>, std::vector<const Entry*>> buckets;
    for (const auto& e : entries) {
      ++counts[e.key];
      const std::string& k = options.mode == CompareMode::Set ? e.set_key : e.multiset_key;
      buckets[{e.key, k}].push_back(&e);
    }
    for (const auto& [key, count] : counts) report.classes.push_back({key, count});
    for (auto& [bucket_key, members] : buckets) {
      std::sort(members.begin(), members.end(),
                [](const Entry* x, const Entry* y) { return x->graph6 < y->graph6; });
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const Entry& a = *members[i];
          const Entry& b = *members[j];
          if (a.key != b.key) throw InternalInconsistency("cospectral pair across classes");
          if (options.mode == CompareMode::Multiset && a.set_key != b.set_key) {
            throw InternalInconsistency("multiset-equal pair with different zero sets");
          }
          report.pairs.push_back({a.key, a.graph6, b.graph6, bucket_key.second, a.psi, b.psi});
        }
      }
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const CospectralPair& x, const CospectralPair& y) {
              return std::tie(x.key, x.a, x.b) < std::tie(y.key, y.a, y.b);
            });
  return report;
}

}  // namespace qgraph
