#include <doctest.h>

#include "oracles.hpp"
#include "posetkit/classifier.hpp"
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

ClassificationResult classify(const GradedPoset& p) {
  if (binomial_profile(p)) return classify_eulerian_binomial(p);
  return classify_eulerian_sheffer(p);
}

ChainCount factorial(int n) {
  ChainCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_round_trip(const GradedPoset& p, const ClassificationResult& expected) {
  const auto got = classify(p);
  CHECK(describe(got) == describe(expected));
  const auto canonical = realize(got);
  REQUIRE(canonical);
  CHECK(is_isomorphic(p, *canonical));
  CHECK(describe(classify(*canonical)) == describe(got));
}

}  // namespace

TEST_CASE("binomial classification") {
  CHECK(classify_eulerian_binomial(boolean(6)) == ClassificationResult{form::Boolean{6}});
  CHECK(classify_eulerian_binomial(butterfly(6)) == ClassificationResult{form::Butterfly{6}});
  CHECK(classify_eulerian_binomial(boolean(2)) == ClassificationResult{form::Boolean{2}});
  CHECK(classify_eulerian_binomial(k_summation(butterfly(5), 2)) ==
        ClassificationResult{form::KSumButterfly{2, 5}});
  CHECK(classify_eulerian_binomial(k_summation(boolean(7), 3)) ==
        ClassificationResult{form::KSumBoolean{3, 7}});
  CHECK(classify_eulerian_binomial(boolean(5)) == ClassificationResult{form::KSumBoolean{1, 5}});
  CHECK(classify_eulerian_binomial(box_sum({polygon(3), polygon(3), polygon(4)})) ==
        ClassificationResult{form::PolygonSum{{4, 3, 3}}});

  CHECK(kind_of([] { classify_eulerian_binomial(chain(3)); }) == ErrorKind::NotEulerian);
  CHECK(kind_of([] { classify_eulerian_binomial(k_summation(boolean(4), 2)); }) ==
        ErrorKind::NotEulerian);
  CHECK(kind_of([] { classify_eulerian_binomial(dual_suspension(boolean(3))); }) ==
        ErrorKind::NotBinomial);
}

TEST_CASE("Sheffer classification") {
  const auto c5 = classify_eulerian_sheffer(cubical(5));
  CHECK(c5 == ClassificationResult{form::CubicalFactorialType{6}});
  CHECK_FALSE(realize(c5));
  CHECK(is_open(classify_eulerian_sheffer(cubical(6))));

  CHECK(classify_eulerian_sheffer(dual_suspension(k_summation(boolean(5), 2))) ==
        ClassificationResult{form::SigmaStarKSumBoolean{2, 5}});
  CHECK(classify_eulerian_sheffer(dual_suspension(k_summation(butterfly(5), 2))) ==
        ClassificationResult{form::SigmaStarKSumButterfly{2, 5}});
  CHECK(classify_eulerian_sheffer(k_summation(dual_suspension(boolean(4)), 3)) ==
        ClassificationResult{form::KSumSigmaStarBoolean{3, 4}});
  CHECK(classify_eulerian_sheffer(k_summation(boolean(5), 2)) ==
        ClassificationResult{form::KSumBoolean{2, 5}});
  CHECK(classify_eulerian_sheffer(boolean(6)) == ClassificationResult{form::Boolean{6}});
  CHECK(classify_eulerian_sheffer(polygon(5)) == ClassificationResult{form::PolygonSum{{5}}});

  const auto thin = classify_eulerian_sheffer(butterfly(6));
  REQUIRE(std::holds_alternative<form::ThinSheffer>(thin));
  CHECK(std::get<form::ThinSheffer>(thin).coatoms.size() == 7);
  CHECK_FALSE(realize(thin));

  CHECK(kind_of([] { classify_eulerian_sheffer(chain(4)); }) == ErrorKind::NotEulerian);
  const auto mixed = box_sum({boolean(5), butterfly(5)});
  REQUIRE(is_eulerian(mixed));
  CHECK(kind_of([&] { classify_eulerian_sheffer(mixed); }) == ErrorKind::NotSheffer);
}

TEST_CASE("cubical factorial functions at even rank") {
  for (int dim : {5, 7}) {
    const auto p = cubical(dim);
    CAPTURE(dim);
    CHECK(classify_eulerian_sheffer(p) == ClassificationResult{form::CubicalFactorialType{dim + 1}});
    const auto s = *sheffer_profile(p);
    for (int k = 1; k <= dim; ++k) CHECK(s.B(k) == factorial(k));
    for (int k = 1; k <= dim + 1; ++k) CHECK(s.D(k) == (ChainCount(1) << (k - 1)) * factorial(k - 1));
  }
}

TEST_CASE("rank-4 cases") {
  for (int i = 1; i <= 9; ++i) {
    const int r = (i == 1 || i == 9) ? 7 : 0;
    const auto triple = rank4_case_triple(i, r);
    const auto matches = match_rank4_cases(triple);
    CHECK(std::find_if(matches.begin(), matches.end(), [&](const auto& m) { return m.first == i; }) !=
          matches.end());
  }
  CHECK(rank4_case_triple(2) == Rank4Triple{10, 6, 120});
  CHECK(rank4_case_triple(6) == Rank4Triple{6, 10, 120});
  CHECK(rank4_case_triple(1, 5) == Rank4Triple{10, 4, 20});
  CHECK(rank4_case_triple(9, 5) == Rank4Triple{4, 10, 20});
  CHECK(match_rank4_cases({6, 6, 30}).empty());
  CHECK(match_rank4_cases({5, 4, 10}).empty());

  auto rank4 = [](const GradedPoset& p) { return std::get<form::Rank4Case>(classify_eulerian_sheffer(p)); };
  CHECK(rank4(boolean(4)).index == 4);
  CHECK(rank4(dual(cubical(3))).index == 3);
  CHECK(rank4(cubical(3)).index == 7);
  for (int r : {4, 5, 6}) {
    const auto sigma_star = rank4(dual_suspension(polygon(r)));
    CHECK(sigma_star.index == 1);
    CHECK(sigma_star.r == r);
    const auto sigma = rank4(suspension(polygon(r)));
    CHECK(sigma.index == 9);
    CHECK(sigma.r == r);
  }
  // Digon suspensions meet both families; triangle suspensions coincide with cases 8 and 5.
  const auto digon = rank4(suspension(polygon(2)));
  CHECK(digon.index == 1);
  CHECK(digon.also_matches == std::vector<int>{9});
  CHECK(rank4(dual_suspension(polygon(2))).also_matches == std::vector<int>{9});
  const auto b3_star = rank4(dual_suspension(boolean(3)));
  CHECK(b3_star.index == 8);
  CHECK(b3_star.also_matches == std::vector<int>{1});
  const auto b3_sigma = rank4(suspension(boolean(3)));
  CHECK(b3_sigma.index == 5);
  CHECK(b3_sigma.also_matches == std::vector<int>{9});

  CHECK(is_isomorphic(*realize(rank4(boolean(4))), boolean(4)));
  CHECK(is_isomorphic(*realize(b3_star), dual_suspension(boolean(3))));
  CHECK_FALSE(realize(rank4(dual(cubical(3)))));
}

TEST_CASE("binomial rank-4 posets are boolean or butterfly") {
  for (const auto& entry : catalog()) {
    const auto p = entry.build();
    if (p.rank() != 4 || !is_eulerian(p)) continue;
    const auto b = binomial_profile(p);
    if (!b) continue;
    CAPTURE(entry.name);
    CHECK((b->B(3) == 4 || b->B(3) == 6));
    const auto result = classify_eulerian_binomial(p);
    CHECK(result == (b->B(3) == 6 ? ClassificationResult{form::Boolean{4}}
                                  : ClassificationResult{form::Butterfly{4}}));
  }
}

TEST_CASE("factorial functions recognize boolean lattices and butterflies") {
  for (const auto& entry : catalog()) {
    const auto p = entry.build();
    if (!is_eulerian(p) || p.rank() < 4) continue;
    const auto b = binomial_profile(p);
    if (!b) continue;
    CAPTURE(entry.name);
    bool boolean_like = true, thin = true;
    for (int k = 1; k <= p.rank(); ++k) {
      boolean_like = boolean_like && b->B(k) == factorial(k);
      thin = thin && b->B(k) == (ChainCount(1) << (k - 1));
    }
    const auto result = classify_eulerian_binomial(p);
    if (boolean_like) {
      const bool ok = result == ClassificationResult{form::Boolean{p.rank()}} ||
                      result == ClassificationResult{form::KSumBoolean{1, p.rank()}};
      CHECK(ok);
      CHECK(is_isomorphic(p, boolean(p.rank())));
    }
    if (thin) {
      const bool ok = result == ClassificationResult{form::Butterfly{p.rank()}} ||
                      result == ClassificationResult{form::KSumButterfly{1, p.rank()}};
      CHECK(ok);
      CHECK(is_isomorphic(p, butterfly(p.rank())));
    }
  }
}

TEST_CASE("round trips over the classification grid") {
  for (int n = 4; n <= 7; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      if (n % 2 == 0 && alpha > 1) continue;
      CAPTURE(n);
      CAPTURE(alpha);
      const auto kb = k_summation(boolean(n), alpha);
      const auto kt = k_summation(butterfly(n), alpha);
      if (n % 2 == 0) {
        check_round_trip(kb, form::Boolean{n});
        check_round_trip(kt, form::Butterfly{n});
        check_round_trip(k_summation(dual_suspension(boolean(n)), alpha), form::KSumSigmaStarBoolean{alpha, n});
        continue;
      }
      check_round_trip(kb, form::KSumBoolean{alpha, n});
      check_round_trip(kt, form::KSumButterfly{alpha, n});
      check_round_trip(dual_suspension(kb), form::SigmaStarKSumBoolean{alpha, n});
      if (alpha > 1)
        check_round_trip(dual_suspension(kt), form::SigmaStarKSumButterfly{alpha, n});
      else
        check_round_trip(dual_suspension(kt), form::Butterfly{n + 1});
    }
  std::vector<std::vector<int>> sums{{2}, {6}, {4, 3}, {6, 6, 2}, {5, 4, 3, 2}, {3, 3, 3}};
  for (const auto& parts : sums) {
    std::vector<GradedPoset> polygons;
    for (int q : parts) polygons.push_back(polygon(q));
    check_round_trip(box_sum(polygons), form::PolygonSum{parts});
  }
}

TEST_CASE("realize builds the canonical posets") {
  CHECK(is_isomorphic(*realize(form::KSumBoolean{2, 5}), k_summation(boolean(5), 2)));
  CHECK(is_isomorphic(*realize(form::PolygonSum{{4, 3}}), box_sum({polygon(4), polygon(3)})));
  CHECK(is_isomorphic(*realize(form::SigmaStarKSumButterfly{3, 5}),
                      dual_suspension(k_summation(butterfly(5), 3))));
  CHECK_FALSE(realize(form::CubicalFactorialType{6}));
  CHECK_FALSE(realize(form::OpenCase{"x", std::nullopt, std::nullopt}));
  CHECK_FALSE(realize(form::ThinSheffer{{1, 2}}));
}

TEST_CASE("catalog round trips") {
  for (const auto& entry : catalog()) {
    const auto p = entry.build();
    if (!is_eulerian(p) || !sheffer_profile(p)) continue;
    CAPTURE(entry.name);
    const auto result = classify(p);
    if (const auto canonical = realize(result)) {
      CHECK(is_isomorphic(p, *canonical));
      CHECK(classify(*canonical) == result);
    }
  }
}

TEST_CASE("triangular classification") {
  for (int alpha = 1; alpha <= 3; ++alpha)
    CHECK(classify_eulerian_triangular(k_summation(boolean(5), alpha)) ==
          ClassificationResult{form::KSumBoolean{alpha, 5}});
  CHECK(classify_eulerian_triangular(boolean(6)) == ClassificationResult{form::Boolean{6}});
  const auto open = classify_eulerian_triangular(butterfly(6));
  REQUIRE(is_open(open));
  CHECK(std::get<form::OpenCase>(open).triangular);

  for (const auto& entry : catalog()) {
    const auto p = entry.build();
    if (!is_eulerian(p) || p.rank() < 4) continue;
    const auto b = binomial_profile(p);
    if (!b || b->B(3) != 6) continue;
    CAPTURE(entry.name);
    CHECK(classify_eulerian_triangular(p) == classify_eulerian_binomial(p));
  }
  CHECK(kind_of([] { classify_eulerian_triangular(chain(3)); }) == ErrorKind::NotEulerian);
  CHECK(kind_of([] { classify_eulerian_triangular(box_sum({boolean(5), butterfly(5)})); }) ==
        ErrorKind::NotTriangular);
}

TEST_CASE("thin Sheffer conditions") {
  const auto t6 = check_thin_sheffer_conditions(butterfly(6));
  CHECK(t6.all_hold());
  CHECK_FALSE(t6.checks.empty());
  for (const auto& c : t6.checks) CHECK(c.applicable);

  const auto summed = check_thin_sheffer_conditions(dual_suspension(k_summation(butterfly(5), 2)));
  CHECK(summed.all_hold());
  // B is thin through rank 4 only, so C(2k) = 2 is forced up to length 4.
  CHECK(summed.coatoms[2] == 2);
  CHECK(summed.coatoms[4] == 2);
  CHECK(summed.coatoms[6] == 4);
  bool saw_pairing = false;
  for (const auto& c : summed.checks) {
    if (!c.applicable) continue;
    if (c.length % 2 == 0) CHECK(c.condition == 2);
    if (c.length % 2 == 1 && c.length > 3) {
      CHECK(c.condition == 3);
      saw_pairing = true;
    }
  }
  CHECK(saw_pairing);

  CHECK(kind_of([] { check_thin_sheffer_conditions(boolean(4)); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { check_thin_sheffer_conditions(chain(4)); }) == ErrorKind::NotEulerian);
}

TEST_CASE("form names") {
  CHECK(form_name(form::KSumBoolean{2, 5}) == "ksum_boolean");
  CHECK(form_name(form::PolygonSum{{3}}) == "polygon_sum");
  CHECK(form_name(form::OpenCase{}) == "open_case");
  CHECK(describe(form::PolygonSum{{4, 3}}) == "PolygonSum(4, 3)");
}
