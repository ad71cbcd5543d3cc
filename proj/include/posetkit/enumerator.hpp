#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "posetkit/classifier.hpp"

namespace posetkit {

inline constexpr int kMaxRank3Middle = 16;

/// Rank-3 bounded posets whose middle is a 2-regular bipartite graph, one per
/// isomorphism class, for t = 2..max_middle atoms. Ordered by t, then by
/// cycle lengths descending.
std::vector<GradedPoset> enumerate_rank3(int max_middle);

/// Cycle lengths (in atoms) of the middle of a rank-3 poset, descending.
std::vector<int> rank3_cycle_type(const GradedPoset& poset);

struct Rank4Solution {
  int k1 = 0, k2 = 0;  ///< B(3) = 2 k1, D(3) = 2 k2
  int m = 0, r = 0, n = 0;
  ChainCount D4;

  Rank4Triple triple() const { return {2 * k1, 2 * k2, 4 * r}; }
  bool operator==(const Rank4Solution&) const = default;
};

/// Integer solutions of 2 + r = m + n, 2r = k1 m = k2 n with r <= max_r.
std::vector<Rank4Solution> enumerate_rank4_factorials(int max_r);

struct CensusReport {
  std::string suite;
  int bound = 0;
  std::map<int, int> counts;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

CensusReport verify_rank3_classification(int max_middle);

/// Witness poset for a rank-4 case; r is used by cases 1 and 9.
GradedPoset rank4_witness(int index, int r);

/// Counts solutions per case index; requires max_r >= 30.
CensusReport verify_rank4_classification(int max_r);

struct CatalogEntry {
  std::string name;
  std::function<GradedPoset()> build;
};

/// Named posets used by the verification suites.
const std::vector<CatalogEntry>& catalog();

/// Identity checks on every Eulerian catalog poset and classification round trips.
CensusReport verify_catalog();

}  // namespace posetkit
