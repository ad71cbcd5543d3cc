#include "posetkit/classifier.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>

#include "posetkit/constructors.hpp"

namespace posetkit {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

ChainCount factorial(int n) {
  ChainCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ChainCount pow2(int n) { return ChainCount(1) << n; }

std::optional<int> exact_ratio(const ChainCount& num, const ChainCount& den) {
  if (den.is_zero()) return std::nullopt;
  ChainCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero() || q > std::numeric_limits<int>::max() || q < 0) return std::nullopt;
  return q.convert_to<int>();
}

std::optional<int> small(const ChainCount& c) {
  if (c > std::numeric_limits<int>::max() || c < 0) return std::nullopt;
  return c.convert_to<int>();
}

std::string join(const std::vector<ChainCount>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + seq[i].str();
  return out;
}

std::string diagnostics(const GradedPoset& poset, const ProfileSummary& summary) {
  std::ostringstream os;
  os << "elements=" << poset.size() << " rank=" << poset.rank() << " covers=" << poset.cover_count()
     << "\nlevel sizes:";
  for (int r = 0; r <= poset.rank(); ++r) os << ' ' << poset.level(r).size();
  if (summary.binomial) os << "\nbinomial B=" << join(summary.binomial->binomial);
  if (summary.sheffer)
    os << "\nsheffer B=" << join(summary.sheffer->binomial)
       << " D=" << join(summary.sheffer->sheffer);
  if (summary.triangular) {
    os << "\ntriangular B(m,n):";
    const auto& t = *summary.triangular;
    for (int m = 0; m <= t.rank; ++m) {
      os << "\n ";
      for (int n = m; n <= t.rank; ++n) os << ' ' << t.B(m, n).str();
    }
  }
  for (const auto* w : {&summary.binomial.witness, &summary.sheffer.witness})
    if (*w) os << "\nwitness: " << (*w)->description;
  // Chain counts per (rank x, rank y) pair: min and max over all intervals.
  std::map<std::pair<int, int>, std::pair<ChainCount, ChainCount>> spread;
  for (Element x = 0; x < poset.size(); ++x) {
    const auto row = chain_counts_from(poset, x);
    for (Element y = 0; y < poset.size(); ++y) {
      if (row[y].is_zero() || y == x) continue;
      auto key = std::pair{poset.rank_of(x), poset.rank_of(y)};
      auto [it, fresh] = spread.try_emplace(key, row[y], row[y]);
      if (!fresh) {
        it->second.first = std::min(it->second.first, row[y]);
        it->second.second = std::max(it->second.second, row[y]);
      }
    }
  }
  os << "\ninterval chain counts (ranks: min..max):";
  for (const auto& [key, mm] : spread)
    os << "\n  [" << key.first << "," << key.second << "]: " << mm.first.str() << ".."
       << mm.second.str();
  return os.str();
}

[[noreturn]] void inconsistent(const GradedPoset& poset, const ProfileSummary& summary,
                               const std::string& reason) {
  throw PosetError(ErrorKind::InconsistentWithTheorems,
                   reason + "\n" + diagnostics(poset, summary));
}

ProfileSummary prepare(const GradedPoset& poset) {
  if (!is_eulerian(poset)) throw PosetError(ErrorKind::NotEulerian, "poset is not Eulerian");
  return scan_profiles(poset);
}

ClassificationResult verified(const GradedPoset& poset, const ProfileSummary& summary,
                              ClassificationResult result) {
  auto canonical = realize(result);
  if (canonical && !is_isomorphic(poset, *canonical))
    inconsistent(poset, summary,
                 "poset is not isomorphic to the canonical form " + describe(result));
  return result;
}

form::PolygonSum polygon_parts(const GradedPoset& poset, const ProfileSummary& summary) {
  form::PolygonSum out;
  for (const auto& component : remove_bounds_components(poset)) {
    const auto atoms = component.level(1).size();
    if (component.rank() != 3 || component.level(2).size() != atoms)
      inconsistent(poset, summary, "rank-3 component is not a polygon");
    out.parts.push_back(static_cast<int>(atoms));
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

}  // namespace

std::string form_name(const ClassificationResult& result) {
  static const std::array<const char*, std::variant_size_v<ClassificationResult>> names{
      "boolean",
      "butterfly",
      "ksum_boolean",
      "ksum_butterfly",
      "polygon_sum",
      "sigma_star_ksum_boolean",
      "ksum_sigma_star_boolean",
      "sigma_star_ksum_butterfly",
      "cubical_factorial_type",
      "rank4_case",
      "thin_sheffer",
      "open_case"};
  return names[result.index()];
}

bool is_open(const ClassificationResult& result) {
  return std::holds_alternative<form::OpenCase>(result);
}

std::string describe(const ClassificationResult& result) {
  auto an = [](const char* name, int a, int n) {
    return std::string(name) + "(" + std::to_string(a) + ", " + std::to_string(n) + ")";
  };
  return std::visit(
      overloaded{
          [](const form::Boolean& f) { return "Boolean(" + std::to_string(f.n) + ")"; },
          [](const form::Butterfly& f) { return "Butterfly(" + std::to_string(f.n) + ")"; },
          [&](const form::KSumBoolean& f) { return an("KSumBoolean", f.alpha, f.n); },
          [&](const form::KSumButterfly& f) { return an("KSumButterfly", f.alpha, f.n); },
          [](const form::PolygonSum& f) {
            std::string s = "PolygonSum(";
            for (std::size_t i = 0; i < f.parts.size(); ++i)
              s += (i ? ", " : "") + std::to_string(f.parts[i]);
            return s + ")";
          },
          [&](const form::SigmaStarKSumBoolean& f) {
            return an("SigmaStarKSumBoolean", f.alpha, f.n);
          },
          [&](const form::KSumSigmaStarBoolean& f) {
            return an("KSumSigmaStarBoolean", f.alpha, f.n);
          },
          [&](const form::SigmaStarKSumButterfly& f) {
            return an("SigmaStarKSumButterfly", f.alpha, f.n);
          },
          [](const form::CubicalFactorialType& f) {
            return "CubicalFactorialType(" + std::to_string(f.n) + ")";
          },
          [](const form::Rank4Case& f) {
            std::string s = "Rank4Case(" + std::to_string(f.index);
            if (f.r) s += ", r=" + std::to_string(*f.r);
            return s + ")";
          },
          [](const form::ThinSheffer& f) { return "ThinSheffer(C=" + join(f.coatoms) + ")"; },
          [](const form::OpenCase& f) { return "OpenCase(" + f.reason + ")"; },
      },
      result);
}

Rank4Triple rank4_case_triple(int index, int r) {
  switch (index) {
    case 1: return {2 * r, 4, 4 * r};
    case 2: return {10, 6, 120};
    case 3: return {8, 6, 48};
    case 4: return {6, 6, 24};
    case 5: return {4, 6, 12};
    case 6: return {6, 10, 120};
    case 7: return {6, 8, 48};
    case 8: return {6, 4, 12};
    case 9: return {4, 2 * r, 4 * r};
  }
  throw PosetError(ErrorKind::InvalidArgument, "rank-4 case index must be 1..9");
}

std::vector<std::pair<int, std::optional<int>>> match_rank4_cases(const Rank4Triple& t) {
  std::vector<std::pair<int, std::optional<int>>> out;
  for (int index = 1; index <= 9; ++index) {
    if (index == 1 || index == 9) {
      if (t.d4 % 4 != 0) continue;
      const int r = t.d4 / 4;
      if (r >= 2 && rank4_case_triple(index, r) == t) out.emplace_back(index, r);
    } else if (rank4_case_triple(index) == t) {
      out.emplace_back(index, std::nullopt);
    }
  }
  return out;
}

ClassificationResult classify_eulerian_binomial(const GradedPoset& poset) {
  const auto summary = prepare(poset);
  if (!summary.binomial)
    throw PosetError(ErrorKind::NotBinomial, summary.binomial.witness->description);
  const auto& p = *summary.binomial;
  const int n = poset.rank();
  if (n <= 2) return verified(poset, summary, form::Boolean{n});
  if (n == 3) return verified(poset, summary, polygon_parts(poset, summary));
  const ChainCount& b3 = p.B(3);
  if (n % 2 == 0) {
    if (b3 == 6) return verified(poset, summary, form::Boolean{n});
    if (b3 == 4) return verified(poset, summary, form::Butterfly{n});
    inconsistent(poset, summary, "even-rank binomial poset with B(3) = " + b3.str());
  }
  if (b3 == 6) {
    if (auto alpha = exact_ratio(p.B(n), factorial(n)))
      return verified(poset, summary, form::KSumBoolean{*alpha, n});
  } else if (b3 == 4) {
    if (auto alpha = exact_ratio(p.B(n), pow2(n - 1)))
      return verified(poset, summary, form::KSumButterfly{*alpha, n});
  }
  inconsistent(poset, summary, "odd-rank binomial poset with B(3) = " + b3.str());
}

ClassificationResult classify_eulerian_sheffer(const GradedPoset& poset) {
  const auto summary = prepare(poset);
  if (!summary.sheffer)
    throw PosetError(ErrorKind::NotSheffer, summary.sheffer.witness->description);
  const auto& p = *summary.sheffer;
  const int n = poset.rank();
  if (n <= 2) return verified(poset, summary, form::Boolean{n});
  if (n == 3) return verified(poset, summary, polygon_parts(poset, summary));
  if (n == 4) {
    auto b3 = small(p.B(3)), d3 = small(p.D(3)), d4 = small(p.D(4));
    std::vector<std::pair<int, std::optional<int>>> cases;
    if (b3 && d3 && d4) cases = match_rank4_cases({*b3, *d3, *d4});
    if (cases.empty()) inconsistent(poset, summary, "rank-4 factorial triple matches no case");
    auto primary = std::find_if(cases.begin(), cases.end(),
                                [](const auto& c) { return c.first != 1 && c.first != 9; });
    if (primary == cases.end()) primary = cases.begin();
    form::Rank4Case result{primary->first, primary->second, {}};
    for (const auto& c : cases)
      if (c.first != result.index) result.also_matches.push_back(c.first);
    return verified(poset, summary, result);
  }

  const ChainCount& b3 = p.B(3);
  const ChainCount& d3 = p.D(3);
  const bool even = n % 2 == 0;
  if (b3 == 6) {
    if (d3 == 6) {
      if (even) return verified(poset, summary, form::Boolean{n});
      if (auto alpha = exact_ratio(p.D(n), factorial(n)))
        return verified(poset, summary, form::KSumBoolean{*alpha, n});
    } else if (d3 == 4) {
      if (even) {
        if (auto alpha = exact_ratio(p.B(n - 1), factorial(n - 1)))
          return verified(poset, summary, form::SigmaStarKSumBoolean{*alpha, n - 1});
      } else if (auto alpha = exact_ratio(p.D(n), 2 * factorial(n - 1))) {
        return verified(poset, summary, form::KSumSigmaStarBoolean{*alpha, n - 1});
      }
    } else if (d3 == 8) {
      if (!even)
        return form::OpenCase{"odd rank with B(3) = 6 and D(3) = 8", p, std::nullopt};
      bool cubical = true;
      for (int k = 1; k <= n; ++k)
        cubical = cubical && p.D(k) == pow2(k - 1) * factorial(k - 1);
      for (int k = 1; k < n; ++k) cubical = cubical && p.B(k) == factorial(k);
      if (cubical) return form::CubicalFactorialType{n};
    } else if (d3 == 10 && n == 5) {
      return form::OpenCase{"rank 5 with B(3) = 6 and D(3) = 10", p, std::nullopt};
    }
    inconsistent(poset, summary,
                 "Sheffer poset with B(3) = 6 and D(3) = " + d3.str() + " fits no branch");
  }
  if (b3 == 4) {
    int thin = 0;
    while (thin + 1 <= n - 1 && p.B(thin + 1) == pow2(thin)) ++thin;
    if (thin == n - 1) return form::ThinSheffer{p.coatoms};
    if (even && thin == n - 2) {
      auto alpha = exact_ratio(p.B(n - 1), pow2(n - 2));
      if (alpha && *alpha > 1)
        return verified(poset, summary, form::SigmaStarKSumButterfly{*alpha, n - 1});
    }
    inconsistent(poset, summary, "Sheffer poset with B(3) = 4 fits no branch");
  }
  inconsistent(poset, summary, "Sheffer poset of rank >= 5 with B(3) = " + b3.str());
}

ClassificationResult classify_eulerian_triangular(const GradedPoset& poset) {
  const auto summary = prepare(poset);
  if (!summary.triangular)
    throw PosetError(ErrorKind::NotTriangular, summary.triangular.witness->description);
  const auto& t = *summary.triangular;
  const int n = poset.rank();
  if (n <= 2) return verified(poset, summary, form::Boolean{n});
  for (int k = 0; k + 3 <= n; ++k)
    if (t.B(k, k + 3) != 6)
      return form::OpenCase{"B(" + std::to_string(k) + "," + std::to_string(k + 3) +
                                ") = " + t.B(k, k + 3).str() + " differs from 6",
                            std::nullopt, t};
  if (n % 2 == 0) return verified(poset, summary, form::Boolean{n});
  auto alpha = exact_ratio(t.B(0, n), factorial(n));
  if (!alpha) inconsistent(poset, summary, "B(0,n) is not a multiple of n!");
  return verified(poset, summary, form::KSumBoolean{*alpha, n});
}

std::optional<GradedPoset> realize(const ClassificationResult& result) {
  return std::visit(
      overloaded{
          [](const form::Boolean& f) -> std::optional<GradedPoset> {
            return f.n == 0 ? chain(0) : boolean(f.n);
          },
          [](const form::Butterfly& f) -> std::optional<GradedPoset> { return butterfly(f.n); },
          [](const form::KSumBoolean& f) -> std::optional<GradedPoset> {
            return k_summation(boolean(f.n), f.alpha);
          },
          [](const form::KSumButterfly& f) -> std::optional<GradedPoset> {
            return k_summation(butterfly(f.n), f.alpha);
          },
          [](const form::PolygonSum& f) -> std::optional<GradedPoset> {
            std::vector<GradedPoset> parts;
            for (int q : f.parts) parts.push_back(polygon(q));
            return parts.size() == 1 ? parts.front() : box_sum(parts);
          },
          [](const form::SigmaStarKSumBoolean& f) -> std::optional<GradedPoset> {
            return dual_suspension(k_summation(boolean(f.n), f.alpha));
          },
          [](const form::KSumSigmaStarBoolean& f) -> std::optional<GradedPoset> {
            return k_summation(dual_suspension(boolean(f.n)), f.alpha);
          },
          [](const form::SigmaStarKSumButterfly& f) -> std::optional<GradedPoset> {
            return dual_suspension(k_summation(butterfly(f.n), f.alpha));
          },
          [](const form::Rank4Case& f) -> std::optional<GradedPoset> {
            if (f.index == 4) return boolean(4);
            if (f.index == 8) return dual_suspension(boolean(3));
            return std::nullopt;
          },
          [](const auto&) -> std::optional<GradedPoset> { return std::nullopt; },
      },
      result);
}

std::string ThinShefferCheck::condition_name() const {
  switch (condition) {
    case 1: return "i";
    case 2: return "ii";
    case 3: return "iii";
  }
  return "?";
}

bool ThinShefferReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ThinShefferCheck& c) { return !c.applicable || c.holds; });
}

namespace {

using CoverSet = std::vector<Element>;

CoverSet lower_set(const GradedPoset& poset, Element e) {
  auto span = poset.lower_covers(e);
  return CoverSet(span.begin(), span.end());
}

// Empty string when the condition holds at y.
std::string check_polygon_sum(const GradedPoset& poset, Element y) {
  std::map<Element, int> up_degree;
  for (Element z : poset.lower_covers(y)) {
    if (poset.lower_covers(z).size() != 2)
      return "element " + std::to_string(z) + " below " + std::to_string(y) +
             " does not cover exactly two atoms";
    for (Element a : poset.lower_covers(z)) ++up_degree[a];
  }
  for (const auto& [a, d] : up_degree)
    if (d != 2)
      return "atom " + std::to_string(a) + " lies below " + std::to_string(d) +
             " elements of [bottom, " + std::to_string(y) + "]";
  return {};
}

std::string check_same_lower(const GradedPoset& poset, Element y) {
  auto coatoms = poset.lower_covers(y);
  if (coatoms.size() != 2)
    return std::to_string(y) + " covers " + std::to_string(coatoms.size()) + " elements";
  if (lower_set(poset, coatoms[0]) != lower_set(poset, coatoms[1]))
    return "coatoms " + std::to_string(coatoms[0]) + " and " + std::to_string(coatoms[1]) +
           " of [bottom, " + std::to_string(y) + "] cover different elements";
  return {};
}

std::string check_pairing(const GradedPoset& poset, Element y) {
  auto coatoms = poset.lower_covers(y);
  if (coatoms.size() % 2 != 0)
    return std::to_string(y) + " covers an odd number of elements";
  std::map<CoverSet, std::vector<Element>> groups;
  for (Element c : coatoms) groups[lower_set(poset, c)].push_back(c);
  for (const auto& [below, members] : groups) {
    if (members.size() != 2 || below.size() != 2)
      return "coatom " + std::to_string(members.front()) + " of [bottom, " + std::to_string(y) +
             "] is not paired with exactly one coatom over the same two elements";
  }
  return {};
}

}  // namespace

ThinShefferReport check_thin_sheffer_conditions(const GradedPoset& poset) {
  if (!is_eulerian(poset)) throw PosetError(ErrorKind::NotEulerian, "poset is not Eulerian");
  auto detected = sheffer_profile(poset);
  if (!detected) throw PosetError(ErrorKind::NotSheffer, detected.witness->description);
  const auto& p = *detected;
  const int n = poset.rank();
  if (n < 4 || p.B(3) != 4)
    throw PosetError(ErrorKind::PreconditionViolated,
                     n < 4 ? "thin Sheffer conditions need rank at least 4"
                           : "B(3) = " + p.B(3).str() + ", the thin profile has B(3) = 4");
  int thin = 0;
  while (thin + 1 <= n - 1 && p.B(thin + 1) == pow2(thin)) ++thin;

  ThinShefferReport report;
  report.coatoms = p.coatoms;
  for (int len = 3; len <= n; ++len) {
    ThinShefferCheck check;
    check.length = len;
    check.condition = len == 3 ? 1 : (len % 2 == 0 ? 2 : 3);
    check.applicable = thin >= len - 1;
    if (!check.applicable) {
      check.witness = "B(" + std::to_string(thin + 1) + ") = " + p.B(thin + 1).str() +
                      " is not 2^" + std::to_string(thin);
      report.checks.push_back(check);
      continue;
    }
    const ChainCount& c = p.C(len);
    if (check.condition == 1 && c < 2)
      check.witness = "C(3) = " + c.str() + " is below 2";
    else if (check.condition == 2 && c != 2)
      check.witness = "C(" + std::to_string(len) + ") = " + c.str() + " is not 2";
    else if (check.condition == 3 && c % 2 != 0)
      check.witness = "C(" + std::to_string(len) + ") = " + c.str() + " is odd";
    for (Element y : poset.level(len)) {
      if (!check.witness.empty()) break;
      check.witness = check.condition == 1   ? check_polygon_sum(poset, y)
                      : check.condition == 2 ? check_same_lower(poset, y)
                                             : check_pairing(poset, y);
    }
    check.holds = check.witness.empty();
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace posetkit
