#include <algorithm>
#include <cstdlib>
#include <set>

#include "posetkit/constructors.hpp"
#include "posetkit/enumerator.hpp"

namespace posetkit {

namespace {

// Compositions of t into parts >= 2; each part becomes one cycle of the middle.
void compositions(int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 2; part <= remaining; ++part) {
    if (remaining - part == 1) continue;
    current.push_back(part);
    compositions(remaining - part, current, out);
    current.pop_back();
  }
}

// Atoms 1..t, coatoms t+1..2t; coatom j of a cycle covers atoms j and j+1 (mod cycle).
GradedPoset rank3_from_cycles(const std::vector<int>& cycles) {
  int t = 0;
  for (int q : cycles) t += q;
  const auto tt = static_cast<Element>(t);
  std::vector<int> ranks(static_cast<std::size_t>(2 * t + 2));
  std::vector<Cover> covers;
  ranks[0] = 0;
  for (Element i = 1; i <= tt; ++i) {
    ranks[i] = 1;
    ranks[tt + i] = 2;
    covers.emplace_back(0, i);
    covers.emplace_back(tt + i, 2 * tt + 1);
  }
  ranks[2 * tt + 1] = 3;
  Element start = 1;
  for (int q : cycles) {
    const auto qq = static_cast<Element>(q);
    for (Element j = 0; j < qq; ++j) {
      covers.emplace_back(start + j, tt + start + j);
      covers.emplace_back(start + (j + 1) % qq, tt + start + j);
    }
    start += qq;
  }
  return GradedPoset::build(2 * tt + 2, std::move(ranks), std::move(covers), 0, 2 * tt + 1);
}

}  // namespace

std::vector<int> rank3_cycle_type(const GradedPoset& poset) {
  if (poset.rank() != 3)
    throw PosetError(ErrorKind::RankMismatch, "cycle type needs a rank-3 poset");
  std::vector<int> out;
  std::vector<bool> seen(poset.size(), false);
  for (Element a : poset.level(1)) {
    if (seen[a]) continue;
    int atoms = 0;
    std::vector<Element> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      const Element e = stack.back();
      stack.pop_back();
      const bool atom = poset.rank_of(e) == 1;
      auto next = atom ? poset.upper_covers(e) : poset.lower_covers(e);
      if (next.size() != 2)
        throw PosetError(ErrorKind::StructuralError,
                         "element " + std::to_string(e) + " has middle degree " +
                             std::to_string(next.size()));
      atoms += atom;
      for (Element f : next)
        if (!seen[f]) {
          seen[f] = true;
          stack.push_back(f);
        }
    }
    out.push_back(atoms);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<GradedPoset> enumerate_rank3(int max_middle) {
  if (max_middle < 1)
    throw PosetError(ErrorKind::InvalidArgument, "max_middle must be positive");
  if (max_middle > kMaxRank3Middle)
    throw PosetError(ErrorKind::BoundExceeded,
                     "max_middle " + std::to_string(max_middle) + " exceeds " +
                         std::to_string(kMaxRank3Middle));
  std::vector<GradedPoset> out;
  for (int t = 2; t <= max_middle; ++t) {
    std::vector<std::vector<int>> all;
    std::vector<int> current;
    compositions(t, current, all);
    std::map<std::vector<int>, GradedPoset, std::greater<>> classes;
    for (const auto& c : all) {
      auto poset = rank3_from_cycles(c);
      classes.try_emplace(rank3_cycle_type(poset), std::move(poset));
    }
    for (auto& [type, poset] : classes) out.push_back(std::move(poset));
  }
  return out;
}

CensusReport verify_rank3_classification(int max_middle) {
  CensusReport report;
  report.suite = "rank3";
  report.bound = max_middle;
  for (int t = 2; t <= max_middle; ++t) report.counts[t] = 0;
  for (const auto& poset : enumerate_rank3(max_middle)) {
    const int t = static_cast<int>(poset.level(1).size());
    ++report.counts[t];
    const auto type = rank3_cycle_type(poset);
    std::string name = "t=" + std::to_string(t) + " cycles";
    for (int q : type) name += " " + std::to_string(q);
    try {
      if (!is_eulerian(poset)) {
        report.failures.push_back(name + ": not Eulerian");
        continue;
      }
      const auto result = classify_eulerian_sheffer(poset);
      const auto* sum = std::get_if<form::PolygonSum>(&result);
      if (!sum) {
        report.failures.push_back(name + ": classified as " + describe(result));
        continue;
      }
      if (sum->parts != type)
        report.failures.push_back(name + ": classified as " + describe(result));
      else if (!is_isomorphic(poset, *realize(result)))
        report.failures.push_back(name + ": not isomorphic to " + describe(result));
    } catch (const PosetError& e) {
      report.failures.push_back(name + ": " + e.what());
    }
  }
  return report;
}

std::vector<Rank4Solution> enumerate_rank4_factorials(int max_r) {
  if (max_r < 2) throw PosetError(ErrorKind::InvalidArgument, "max_r must be at least 2");
  std::vector<Rank4Solution> out;
  for (int r = 2; r <= max_r; ++r)
    for (int m = 1; m <= r + 1; ++m) {
      const int n = 2 + r - m;
      if ((2 * r) % m != 0 || (2 * r) % n != 0) continue;
      out.push_back({2 * r / m, 2 * r / n, m, r, n, ChainCount(4 * r)});
    }
  return out;
}

namespace {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("POSETKIT_DATA_DIR")) return env;
  return POSETKIT_DATA_DIR;
}

}  // namespace

GradedPoset rank4_witness(int index, int r) {
  switch (index) {
    case 1: return dual_suspension(polygon(r));
    case 2: return face_lattice_from_incidence(load_incidence(data_dir() / "icosahedron.json"));
    case 3: return dual(cubical(3));
    case 4: return boolean(4);
    case 5: return suspension(boolean(3));
    case 6: return face_lattice_from_incidence(load_incidence(data_dir() / "dodecahedron.json"));
    case 7: return cubical(3);
    case 8: return dual_suspension(boolean(3));
    case 9: return suspension(polygon(r));
  }
  throw PosetError(ErrorKind::InvalidArgument, "rank-4 case index must be 1..9");
}

CensusReport verify_rank4_classification(int max_r) {
  if (max_r < 30)
    throw PosetError(ErrorKind::PreconditionViolated,
                     "max_r must be at least 30 to reach every case");
  CensusReport report;
  report.suite = "rank4";
  report.bound = max_r;
  for (int i = 1; i <= 9; ++i) report.counts[i] = 0;

  const auto solutions = enumerate_rank4_factorials(max_r);
  std::set<std::pair<int, int>> family_hits;  // (case, r)
  for (const auto& s : solutions) {
    const auto cases = match_rank4_cases(s.triple());
    const auto t = s.triple();
    const std::string name = "(m,r,n)=(" + std::to_string(s.m) + "," + std::to_string(s.r) + "," +
                             std::to_string(s.n) + ") triple (" + std::to_string(t.b3) + "," +
                             std::to_string(t.d3) + "," + std::to_string(t.d4) + ")";
    if (cases.empty()) report.failures.push_back(name + " matches no case");
    for (const auto& [index, r] : cases) {
      ++report.counts[index];
      if (r) family_hits.emplace(index, *r);
    }
  }
  for (int i = 1; i <= 9; ++i)
    if (report.counts[i] == 0)
      report.failures.push_back("case " + std::to_string(i) + " has no solution");
  for (int family : {1, 9})
    for (int r = 2; r <= max_r; ++r)
      if (!family_hits.count({family, r}))
        report.failures.push_back("case " + std::to_string(family) + " misses r=" +
                                  std::to_string(r));

  // Witnesses: measured factorial triple and level sizes must match.
  for (int index = 1; index <= 9; ++index) {
    const bool family = index == 1 || index == 9;
    for (int r = 2; r <= (family ? 6 : 2); ++r) {
      std::string name = "witness for case " + std::to_string(index);
      if (family) name += " r=" + std::to_string(r);
      try {
        const auto poset = rank4_witness(index, r);
        if (poset.rank() != 4 || !is_eulerian(poset)) {
          report.failures.push_back(name + ": not an Eulerian rank-4 poset");
          continue;
        }
        const auto profile = sheffer_profile(poset);
        if (!profile) {
          report.failures.push_back(name + ": not Sheffer");
          continue;
        }
        const Rank4Triple measured{profile->B(3).convert_to<int>(),
                                   profile->D(3).convert_to<int>(),
                                   profile->D(4).convert_to<int>()};
        if (measured != rank4_case_triple(index, r))
          report.failures.push_back(name + ": measured triple differs");
        const int m = static_cast<int>(poset.level(1).size());
        const int rr = static_cast<int>(poset.level(2).size());
        const int n = static_cast<int>(poset.level(3).size());
        const bool listed = std::any_of(solutions.begin(), solutions.end(), [&](const auto& s) {
          return s.m == m && s.r == rr && s.n == n && s.triple() == measured;
        });
        if (!listed) report.failures.push_back(name + ": level sizes not among the solutions");
      } catch (const PosetError& e) {
        report.failures.push_back(name + ": " + e.what());
      }
    }
  }
  return report;
}

}  // namespace posetkit
