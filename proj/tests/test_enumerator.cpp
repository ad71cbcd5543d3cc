#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/enumerator.hpp"

using namespace posetkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PosetError& e) {
    return e.kind();
  }
  FAIL("no PosetError thrown");
  return ErrorKind::InvalidArgument;
}

std::map<int, std::vector<GradedPoset>> by_middle(const std::vector<GradedPoset>& posets) {
  std::map<int, std::vector<GradedPoset>> out;
  for (const auto& p : posets) out[static_cast<int>(p.level(1).size())].push_back(p);
  return out;
}

}  // namespace

TEST_CASE("rank-3 enumeration matches the partition and labelled-graph counts") {
  const auto groups = by_middle(enumerate_rank3(8));
  for (int t = 2; t <= 8; ++t) {
    CAPTURE(t);
    const auto& level = groups.at(t);
    CHECK(static_cast<int>(level.size()) == oracle::partitions_min2(t));
    if (t <= 6) CHECK(static_cast<int>(level.size()) == oracle::labelled_rank3_classes(t));
    for (const auto& p : level) {
      CHECK(p.rank() == 3);
      CHECK(p.level(2).size() == static_cast<std::size_t>(t));
      CHECK(is_eulerian(p));
      for (Element x : p.level(1)) CHECK(p.upper_covers(x).size() == 2);
      for (Element y : p.level(2)) CHECK(p.lower_covers(y).size() == 2);
    }
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j) CHECK_FALSE(is_isomorphic(level[i], level[j]));
  }
  const std::vector<int> expected{1, 1, 2, 2, 4, 4, 7};
  for (int t = 2; t <= 8; ++t) CHECK(static_cast<int>(groups.at(t).size()) == expected[t - 2]);
}

TEST_CASE("rank-3 examples") {
  const auto two = enumerate_rank3(2);
  REQUIRE(two.size() == 1);
  CHECK(is_isomorphic(two[0], polygon(2)));

  const auto four = by_middle(enumerate_rank3(4)).at(4);
  REQUIRE(four.size() == 2);
  CHECK(rank3_cycle_type(four[0]) == std::vector<int>{4});
  CHECK(is_isomorphic(four[0], polygon(4)));
  CHECK(is_isomorphic(four[1], box_sum({polygon(2), polygon(2)})));

  const auto six = by_middle(enumerate_rank3(6)).at(6);
  std::set<std::vector<int>> types;
  for (const auto& p : six) types.insert(rank3_cycle_type(p));
  CHECK(types == std::set<std::vector<int>>{{6}, {4, 2}, {3, 3}, {2, 2, 2}});

  const auto five = by_middle(enumerate_rank3(5)).at(5);
  REQUIRE(five.size() == 2);
  CHECK(classify_eulerian_sheffer(five[0]) == ClassificationResult{form::PolygonSum{{5}}});
  CHECK(classify_eulerian_sheffer(five[1]) == ClassificationResult{form::PolygonSum{{3, 2}}});

  CHECK(rank3_cycle_type(box_sum({polygon(3), polygon(5), polygon(2)})) == std::vector<int>{5, 3, 2});
  CHECK(kind_of([] { enumerate_rank3(kMaxRank3Middle + 1); }) == ErrorKind::BoundExceeded);
  CHECK(kind_of([] { enumerate_rank3(0); }) == ErrorKind::InvalidArgument);
  CHECK(enumerate_rank3(kMaxRank3Middle).size() > 0);
}

TEST_CASE("rank-3 verification report") {
  const auto report = verify_rank3_classification(6);
  CHECK(report.passed());
  CHECK(report.counts == std::map<int, int>{{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 4}});
  const auto again = verify_rank3_classification(6);
  CHECK(again.counts == report.counts);
  CHECK(again.failures == report.failures);
  const auto one = verify_rank3_classification(2);
  CHECK(one.passed());
  CHECK(one.counts == std::map<int, int>{{2, 1}});
}

TEST_CASE("rank-4 factorial solutions match the brute-force triples") {
  for (int max_r : {2, 6, 12, 30, 60}) {
    CAPTURE(max_r);
    std::set<oracle::Rank4Triple> mine;
    for (const auto& s : enumerate_rank4_factorials(max_r)) {
      CHECK(2 + s.r == s.m + s.n);
      CHECK(2 * s.r == s.k1 * s.m);
      CHECK(2 * s.r == s.k2 * s.n);
      CHECK(s.r >= 2);
      CHECK(s.r <= max_r);
      CHECK(s.D4 == 4 * s.r);
      const auto t = s.triple();
      mine.insert({t.b3, t.d3, t.d4});
    }
    const auto expected = oracle::rank4_triples(max_r);
    CHECK(std::vector<oracle::Rank4Triple>(mine.begin(), mine.end()) == expected);
  }
  CHECK(kind_of([] { enumerate_rank4_factorials(1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rank-4 solutions fall into the surviving cases") {
  const auto solutions = enumerate_rank4_factorials(30);
  const std::set<std::pair<int, int>> sporadic{{3, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 3}};
  for (const auto& s : solutions) {
    if (s.k1 != 2 && s.k2 != 2) {
      CHECK(s.k1 <= 5);
      CHECK(s.k2 <= 5);
    }
    CHECK((s.k1 == 2 || s.k2 == 2 || sporadic.count({s.k1, s.k2}) == 1));
    CHECK_FALSE(match_rank4_cases(s.triple()).empty());
  }
  auto find = [&](int k1, int k2) {
    std::vector<Rank4Solution> out;
    for (const auto& s : solutions)
      if (s.k1 == k1 && s.k2 == k2) out.push_back(s);
    return out;
  };
  const auto b4 = find(3, 3);
  REQUIRE(b4.size() == 1);
  CHECK((b4[0].m == 4 && b4[0].n == 4 && b4[0].r == 6));
  const auto ico = find(5, 3);
  REQUIRE(ico.size() == 1);
  CHECK((ico[0].m == 12 && ico[0].n == 20 && ico[0].r == 30));
  const auto family = find(3, 2);
  CHECK(family.size() == 1);
  for (const auto& s : find(2, 2)) CHECK(s.m + s.n == s.r + 2);
  // k2 = 2 forces n = r; every r from 2 to 30 appears with k1 = r.
  for (int r = 2; r <= 30; ++r) {
    const auto row = find(r, 2);
    REQUIRE(row.size() == 1);
    CHECK((row[0].m == 2 && row[0].n == r && row[0].r == r));
  }
}

TEST_CASE("rank-4 verification report") {
  const auto report = verify_rank4_classification(30);
  CHECK(report.passed());
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.counts.size() == 9);
  for (int i = 1; i <= 9; ++i) CHECK(report.counts.at(i) > 0);
  const auto again = verify_rank4_classification(30);
  CHECK(again.counts == report.counts);
  CHECK(kind_of([] { verify_rank4_classification(29); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("rank-4 witnesses carry their case triple") {
  auto triple_of = [](const GradedPoset& p) {
    const auto s = *sheffer_profile(p);
    return Rank4Triple{static_cast<int>(s.B(3)), static_cast<int>(s.D(3)), static_cast<int>(s.D(4))};
  };
  for (int i = 1; i <= 9; ++i)
    for (int r : {3, 5}) {
      CAPTURE(i);
      CAPTURE(r);
      const auto w = rank4_witness(i, r);
      CHECK(is_eulerian(w));
      CHECK(triple_of(w) == rank4_case_triple(i, r));
    }
  const auto ico = rank4_witness(2, 0);
  CHECK(ico.level(1).size() == 12);
  CHECK(ico.level(2).size() == 30);
  CHECK(ico.level(3).size() == 20);
  CHECK(triple_of(ico) == Rank4Triple{10, 6, 120});
  const auto dod = rank4_witness(6, 0);
  CHECK(dod.level(1).size() == 20);
  CHECK(dod.level(3).size() == 12);
  CHECK(triple_of(dod) == Rank4Triple{6, 10, 120});
}

TEST_CASE("catalog verification") {
  const auto report = verify_catalog();
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.passed());
  CHECK(report.counts.size() >= 5);
  std::set<std::string> names;
  for (const auto& entry : catalog()) CHECK(names.insert(entry.name).second);
}
