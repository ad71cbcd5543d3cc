#include <cstdlib>

#include "posetkit/constructors.hpp"
#include "posetkit/enumerator.hpp"

namespace posetkit {

namespace {

std::filesystem::path fixture(const char* name) {
  const char* env = std::getenv("POSETKIT_DATA_DIR");
  return std::filesystem::path(env ? env : POSETKIT_DATA_DIR) / name;
}

std::string call(const std::string& f, int n) { return f + "(" + std::to_string(n) + ")"; }

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  for (int n = 1; n <= 7; ++n) c.push_back({call("boolean", n), [n] { return boolean(n); }});
  for (int n = 1; n <= 7; ++n) c.push_back({call("butterfly", n), [n] { return butterfly(n); }});
  for (int n = 1; n <= 4; ++n) c.push_back({call("chain", n), [n] { return chain(n); }});
  for (int q = 2; q <= 8; ++q) c.push_back({call("polygon", q), [q] { return polygon(q); }});
  for (int n = 1; n <= 5; ++n) c.push_back({call("cubical", n), [n] { return cubical(n); }});
  c.push_back({"subspace(2, 2)", [] { return subspace_lattice(2, 2); }});
  c.push_back({"subspace(2, 3)", [] { return subspace_lattice(2, 3); }});
  c.push_back({"subspace(3, 2)", [] { return subspace_lattice(3, 2); }});
  for (int n = 2; n <= 5; ++n) {
    c.push_back({"sigma_star(" + call("boolean", n) + ")",
                 [n] { return dual_suspension(boolean(n)); }});
    c.push_back({"sigma_star(" + call("butterfly", n) + ")",
                 [n] { return dual_suspension(butterfly(n)); }});
  }
  for (int q = 2; q <= 6; ++q) {
    c.push_back({"sigma_star(" + call("polygon", q) + ")",
                 [q] { return dual_suspension(polygon(q)); }});
    c.push_back({"sigma(" + call("polygon", q) + ")", [q] { return suspension(polygon(q)); }});
  }
  c.push_back({"sigma(boolean(3))", [] { return suspension(boolean(3)); }});
  c.push_back({"sigma_star(cubical(3))", [] { return dual_suspension(cubical(3)); }});
  c.push_back({"dual(cubical(3))", [] { return dual(cubical(3)); }});
  c.push_back({"dual(cubical(4))", [] { return dual(cubical(4)); }});
  for (int a = 2; a <= 3; ++a) {
    const std::string k = std::to_string(a);
    for (int n : {3, 5})
      c.push_back({"ksum(" + k + ", " + call("boolean", n) + ")",
                   [a, n] { return k_summation(boolean(n), a); }});
    c.push_back({"ksum(" + k + ", boolean(4))", [a] { return k_summation(boolean(4), a); }});
    c.push_back({"ksum(" + k + ", butterfly(5))", [a] { return k_summation(butterfly(5), a); }});
    c.push_back({"sigma_star(ksum(" + k + ", boolean(5)))",
                 [a] { return dual_suspension(k_summation(boolean(5), a)); }});
    c.push_back({"sigma_star(ksum(" + k + ", butterfly(5)))",
                 [a] { return dual_suspension(k_summation(butterfly(5), a)); }});
    c.push_back({"ksum(" + k + ", sigma_star(boolean(4)))",
                 [a] { return k_summation(dual_suspension(boolean(4)), a); }});
  }
  c.push_back({"boxsum(polygon(4), polygon(3), polygon(3))",
               [] { return box_sum({polygon(4), polygon(3), polygon(3)}); }});
  c.push_back({"boxsum(polygon(2), polygon(5))",
               [] { return box_sum({polygon(2), polygon(5)}); }});
  c.push_back({"segre(boolean(2), boolean(2))",
               [] { return rank_product(boolean(2), boolean(2)); }});
  c.push_back({"segre(boolean(3), butterfly(3))",
               [] { return rank_product(boolean(3), butterfly(3)); }});
  c.push_back({"segre(polygon(4), polygon(4))",
               [] { return rank_product(polygon(4), polygon(4)); }});
  c.push_back({"load(\"icosahedron.json\")", [] {
                 return face_lattice_from_incidence(load_incidence(fixture("icosahedron.json")));
               }});
  c.push_back({"load(\"dodecahedron.json\")", [] {
                 return face_lattice_from_incidence(load_incidence(fixture("dodecahedron.json")));
               }});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

CensusReport verify_catalog() {
  CensusReport report;
  report.suite = "catalog";
  report.bound = static_cast<int>(catalog().size());
  for (const auto& entry : catalog()) {
    auto fail = [&](const std::string& what) { report.failures.push_back(entry.name + ": " + what); };
    try {
      const auto poset = entry.build();
      ++report.counts[poset.rank()];
      const OrderIndex order(poset);
      const bool eulerian = is_eulerian(poset, order);
      if (eulerian != is_eulerian_by_mobius(poset)) fail("Eulerian tests disagree");
      if (!eulerian) continue;
      for (Element x = 0; x < poset.size(); ++x) {
        const auto row = mobius_row(poset, order, x);
        const ElementSet& above = order.up_set(x);
        for (auto y = above.find_first(); y != ElementSet::npos; y = above.find_next(y)) {
          const int len = poset.rank_of(static_cast<Element>(y)) - poset.rank_of(x);
          if (len > 0 && euler_poincare_residual(poset, order, x, static_cast<Element>(y)) != 0)
            fail("Euler-Poincare residual on [" + std::to_string(x) + "," + std::to_string(y) + "]");
          if (row[y] != (len % 2 == 0 ? 1 : -1))
            fail("mu(" + std::to_string(x) + "," + std::to_string(y) + ") is not (-1)^len");
        }
      }
      const auto summary = scan_profiles(poset);
      if (summary.binomial) {
        if (!verify_rank_count_formulas(poset, *summary.binomial)) fail("binomial level sizes");
        for (int n = 1; n <= poset.rank(); ++n)
          if (binomial_euler_poincare_sum(*summary.binomial, n) != 0)
            fail("binomial Euler-Poincare sum at " + std::to_string(n));
        const auto r = classify_eulerian_binomial(poset);
        if (auto canonical = realize(r); canonical && !is_isomorphic(poset, *canonical))
          fail("binomial round trip " + describe(r));
      }
      if (summary.sheffer) {
        if (!verify_rank_count_formulas(poset, *summary.sheffer)) fail("Sheffer level sizes");
        for (int m = 1; m <= poset.rank(); ++m)
          if (sheffer_euler_poincare_sum(*summary.sheffer, m) != 0)
            fail("Sheffer Euler-Poincare sum at " + std::to_string(m));
        const auto r = classify_eulerian_sheffer(poset);
        if (auto canonical = realize(r); canonical && !is_isomorphic(poset, *canonical))
          fail("Sheffer round trip " + describe(r));
        if (entry.name.rfind("sigma_star(", 0) == 0 &&
            summary.sheffer->D(poset.rank()) != 2 * summary.sheffer->B(poset.rank() - 1))
          fail("D(n) differs from 2 B(n-1)");
      }
      if (summary.triangular) {
        const auto r = classify_eulerian_triangular(poset);
        if (auto canonical = realize(r); canonical && !is_isomorphic(poset, *canonical))
          fail("triangular round trip " + describe(r));
      }
    } catch (const PosetError& e) {
      fail(e.what());
    }
  }
  return report;
}

}  // namespace posetkit
