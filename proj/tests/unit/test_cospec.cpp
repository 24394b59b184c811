#include <doctest.h>

#include "helpers.hpp"
#include "qgraph/cospec.hpp"
#include "qgraph/spectral.hpp"

using namespace qgraph;

TEST_CASE("signature examples") {
  const auto p5 = signature(path_graph(5));
  CHECK(p5.delta == 1);
  CHECK(p5.squarefree.to_string() == "2z^3-z");
  const auto paw_sig = signature(paw());
  CHECK(paw_sig.delta == 1);
  CHECK(paw_sig.key(CompareMode::Multiset) == "z^3-7/12z-1/6");

  const Graph c4 = cycle_graph(4);
  const Graph c4b = from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(signature(c4).key(CompareMode::Set) == signature(c4b).key(CompareMode::Set));
  CHECK(signature(c4).key(CompareMode::Multiset) == signature(c4b).key(CompareMode::Multiset));
}

TEST_CASE("mode names") {
  CHECK(parse_mode("set") == CompareMode::Set);
  CHECK(parse_mode("multiset") == CompareMode::Multiset);
  CHECK(to_string(CompareMode::Multiset) == "multiset");
  CHECK_THROWS_AS(parse_mode("bag"), std::invalid_argument);
}

TEST_CASE("small scans find no pairs") {
  const auto multiset = scan(1, 4, {CompareMode::Multiset, kDefaultMaxEdges, 1});
  CHECK(multiset.pairs.empty());
  std::size_t total = 0;
  for (const auto& c : multiset.classes) total += c.count;
  CHECK(total == 1 + 1 + 3 + 5);

  const auto set = scan(5, 6, {CompareMode::Set, kDefaultMaxEdges, 2});
  CHECK(set.pairs.empty());
}

TEST_CASE("scan bounds") {
  CHECK_THROWS_AS(scan(0, 3), LimitExceeded);
  CHECK_THROWS_AS(scan(4, 3), LimitExceeded);
  CHECK_THROWS_AS(scan(1, 11), LimitExceeded);
}
