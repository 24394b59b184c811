#include "qgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "qgraph/graph6.hpp"

namespace qgraph {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Split every cell by the vector of neighbor counts into each current cell
// until nothing splits. Sub-cells are ordered by that vector, so the result
// depends only on the ordered partition, not on vertex labels.
void refine(const AdjacencyBits& bits, Partition& cells) {
  std::vector<std::uint64_t> masks;
  std::vector<std::pair<std::vector<int>, Vertex>> keyed;
  for (;;) {
    masks.assign(cells.size(), 0);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (Vertex v : cells[k]) masks[k] |= std::uint64_t{1} << v;
    }

    Partition next;
    next.reserve(cells.size() + 4);
    bool split = false;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      keyed.clear();
      for (Vertex v : cell) {
        std::vector<int> signature(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
          signature[k] = std::popcount(bits.row(v) & masks[k]);
        }
        keyed.emplace_back(std::move(signature), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = next.size();
      next.emplace_back();
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
      if (next.size() - start > 1) split = true;
    }
    cells = std::move(next);
    if (!split) return;
  }
}

bool twins(const AdjacencyBits& bits, Vertex a, Vertex b) {
  const std::uint64_t ra = bits.row(a) & ~(std::uint64_t{1} << b);
  const std::uint64_t rb = bits.row(b) & ~(std::uint64_t{1} << a);
  return ra == rb;
}

class Search {
 public:
  explicit Search(const AdjacencyBits& bits) : bits_(bits), n_(bits.vertex_count()) {
    const std::size_t bit_count = static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
    words_ = (bit_count + 63) / 64;
  }

  std::vector<Vertex> run() {
    Partition cells;
    if (n_ > 0) {
      // Initial partition: a single cell; the first refinement pass sorts by degree.
      Cell all(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
      cells.push_back(std::move(all));
    }
    descend(std::move(cells));
    return best_order_;
  }

 private:
  void descend(Partition cells) {
    refine(bits_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : cells[t]) {
      if (std::any_of(tried.begin(), tried.end(),
                      [&](Vertex u) { return twins(bits_, u, v); })) {
        continue;
      }
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      child.push_back({v});
      Cell rest;
      for (Vertex u : cells[t]) {
        if (u != v) rest.push_back(u);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      descend(std::move(child));
    }
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) order.push_back(c.front());

    std::vector<std::uint64_t> code(words_, 0);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      const std::uint64_t row = bits_.row(order[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i, ++k) {
        if ((row >> order[static_cast<std::size_t>(i)]) & 1U) {
          code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
      }
    }
    if (best_order_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const AdjacencyBits& bits_;
  int n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

std::vector<Vertex> canonical_order(const AdjacencyBits& bits) { return Search(bits).run(); }

AdjacencyBits canonical_form(const AdjacencyBits& bits) {
  return bits.permuted(canonical_order(bits));
}

CanonicalCode canonical_code(const AdjacencyBits& bits) {
  return {encode_graph6(canonical_form(bits))};
}

CanonicalCode canonical_code(const Graph& graph) { return canonical_code(graph.bits()); }

Graph canonical_graph(const Graph& graph) {
  return Graph::from_bits(canonical_form(graph.bits()));
}

}  // namespace qgraph
