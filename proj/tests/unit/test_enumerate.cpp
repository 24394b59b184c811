#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/enumerate.hpp"
#include "qgraph/graph6.hpp"

using namespace qgraph;

TEST_CASE("enumeration matches the brute-force oracle for g <= 6") {
  for (int g = 1; g <= 6; ++g) {
    const auto graphs = enumerate_connected(g, {kDefaultMaxEdges, 1});
    const auto reference = oracle::enumerate_connected(g);
    CHECK(graphs.size() == reference.total);

    std::set<std::pair<int, std::uint64_t>> forms;
    std::map<std::pair<int, int>, std::size_t> by_class;
    for (const auto& graph : graphs) {
      CHECK(graph.edge_count() == g);
      forms.insert({graph.vertex_count(), oracle::canonical(to_labeled(graph))});
      const ClassKey key = class_key(graph);
      ++by_class[{key.edges, key.delta}];
    }
    CHECK(forms == reference.forms);
    CHECK(by_class == reference.by_class);
  }
}

TEST_CASE("enumeration output is canonical and ordered") {
  const auto graphs = enumerate_connected(6);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(canonical_graph(graphs[i]) == graphs[i]);
    if (i > 0) {
      const auto a = std::make_pair(graphs[i - 1].vertex_count(), canonical_code(graphs[i - 1]));
      const auto b = std::make_pair(graphs[i].vertex_count(), canonical_code(graphs[i]));
      CHECK(a < b);
    }
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  const auto one = enumerate_connected(7, {kDefaultMaxEdges, 1});
  const auto three = enumerate_connected(7, {kDefaultMaxEdges, 3});
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(to_graph6(one[i]) == to_graph6(three[i]));
}

TEST_CASE("class counts for g = 7") {
  const auto counts = count_by_class(7);
  CHECK(counts.at({7, 0}) == 1);
  CHECK(counts.at({7, 4}) == 10);
  CHECK(counts.at({7, 5}) == 3);
  CHECK(counts.at({7, 6}) == 1);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_connected(0), LimitExceeded);
  CHECK_THROWS_AS(enumerate_connected(11), LimitExceeded);
  CHECK_THROWS_AS(enumerate_connected(5, {4, 1}), LimitExceeded);
  const auto run = run_enumeration(4);
  CHECK(run.representatives.size() == 5);
  CHECK(run.emitted.at({4, 1}) == 2);
}
