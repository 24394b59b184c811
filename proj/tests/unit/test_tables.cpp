#include <doctest.h>

#include <set>

#include "qgraph/printed_tables.hpp"

using namespace qgraph;

TEST_CASE("embedded table shape") {
  const auto printed = printed_polynomials();
  CHECK(printed.size() == 109);
  std::set<int> six_three;
  for (const auto& p : printed) {
    if (p.edges == 6 && p.delta == 3) six_three.insert(p.index);
  }
  CHECK(six_three == std::set<int>{1, 2, 3, 4, 6, 7, 8});
  CHECK(printed.back().text == "-7z");
  CHECK(stated_counts().size() == 15);
}

TEST_CASE("term splitting and distance") {
  CHECK(split_terms("-8z^3+4z") == std::vector<std::string>{"-8z^3", "4z"});
  CHECK(split_terms("48z^--32z^2-8z") == std::vector<std::string>{"48z^-", "-32z^2", "-8z"});
  CHECK(within_one_term(split_terms("-24z^3+5"), split_terms("-24z^3+5z")));
  CHECK(!within_one_term(split_terms("24z^4-24z^2-8z"), split_terms("36z^4-28z^2-8z")));
  CHECK(term_distance(split_terms("1"), split_terms("-z^2+1")) == 1);
}

TEST_CASE("printed tables against computed psi") {
  const TableCheck check = verify_printed_tables({kDefaultMaxEdges, 1});
  REQUIRE(check.diffs.size() == 109);
  auto find = [&](int g, int d, int index) -> const TableDiff& {
    for (const auto& x : check.diffs) {
      if (x.key == ClassKey{g, d} && x.index == index) return x;
    }
    FAIL("missing entry");
    return check.diffs.front();
  };
  CHECK(find(4, 1, 1).verdict == Verdict::Exact);
  CHECK(find(4, 1, 2).verdict == Verdict::Exact);

  const auto& d722 = find(7, 2, 22);
  CHECK(d722.verdict == Verdict::TypoCorrected);
  CHECK(d722.computed == "-108z^5+99z^3+8z^2-10z");

  const auto& d622 = find(6, 2, 2);
  CHECK(d622.verdict == Verdict::TypoCorrected);
  CHECK(d622.computed == "24z^4-14z^2+1");

  CHECK(find(6, 2, 10).computed == "48z^4-32z^2-8z");

  // Every printed entry left unmatched has an unclaimed enumerated graph in
  // its class to account for it.
  for (const auto& x : check.diffs) {
    if (x.verdict != Verdict::Unmatched) continue;
    bool listed = false;
    for (const auto& u : check.unclaimed) listed = listed || u.key == x.key;
    CHECK_MESSAGE(listed, to_string(x.key) << "^" << x.index);
  }

  CHECK(check.enumerated_per_edges.at(6) == 30);
  CHECK(check.enumerated_per_edges.at(7) == 79);
  CHECK(check.printed_per_edges.at(7) == 70);
  bool total_six = false;
  for (const auto& c : check.count_discrepancies) {
    if (c.edges == 6 && !c.delta) total_six = c.stated == 29 && c.enumerated == 30;
  }
  CHECK(total_six);
}
