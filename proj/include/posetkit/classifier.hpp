#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posetkit/analyzers.hpp"

namespace posetkit {

namespace form {

struct Boolean {
  int n = 0;
  bool operator==(const Boolean&) const = default;
};

struct Butterfly {
  int n = 0;
  bool operator==(const Butterfly&) const = default;
};

/// k-summation of B_n with k = alpha.
struct KSumBoolean {
  int alpha = 1;
  int n = 0;
  bool operator==(const KSumBoolean&) const = default;
};

struct KSumButterfly {
  int alpha = 1;
  int n = 0;
  bool operator==(const KSumButterfly&) const = default;
};

/// Box sum of polygons; parts sorted descending.
struct PolygonSum {
  std::vector<int> parts;
  bool operator==(const PolygonSum&) const = default;
};

/// Dual suspension of the alpha-fold summation of B_n, n odd.
struct SigmaStarKSumBoolean {
  int alpha = 1;
  int n = 0;
  bool operator==(const SigmaStarKSumBoolean&) const = default;
};

/// alpha-fold summation of the dual suspension of B_n, n even.
struct KSumSigmaStarBoolean {
  int alpha = 1;
  int n = 0;
  bool operator==(const KSumSigmaStarBoolean&) const = default;
};

/// Dual suspension of the alpha-fold summation of T_n, n odd, alpha > 1.
struct SigmaStarKSumButterfly {
  int alpha = 2;
  int n = 0;
  bool operator==(const SigmaStarKSumButterfly&) const = default;
};

/// Same factorial functions as the cubical lattice of rank n; structure not unique.
struct CubicalFactorialType {
  int n = 0;
  bool operator==(const CubicalFactorialType&) const = default;
};

/// One of the nine rank-4 factorial triples (B(3), D(3), D(4)).
struct Rank4Case {
  int index = 0;
  std::optional<int> r;           ///< free parameter of cases 1 and 9
  std::vector<int> also_matches;  ///< other case indices with the same triple
  bool operator==(const Rank4Case&) const = default;
};

/// Sheffer poset with B(k) = 2^(k-1); C holds the coatom function, C[0] = 1.
struct ThinSheffer {
  std::vector<ChainCount> coatoms;
  bool operator==(const ThinSheffer&) const = default;
};

struct OpenCase {
  std::string reason;
  std::optional<FactorialProfile> profile;
  std::optional<TriangularProfile> triangular;
  bool operator==(const OpenCase&) const = default;
};

}  // namespace form

using ClassificationResult =
    std::variant<form::Boolean, form::Butterfly, form::KSumBoolean, form::KSumButterfly,
                 form::PolygonSum, form::SigmaStarKSumBoolean, form::KSumSigmaStarBoolean,
                 form::SigmaStarKSumButterfly, form::CubicalFactorialType, form::Rank4Case,
                 form::ThinSheffer, form::OpenCase>;

/// JSON tag, e.g. "ksum_boolean".
std::string form_name(const ClassificationResult& result);
bool is_open(const ClassificationResult& result);
std::string describe(const ClassificationResult& result);

/// The nine rank-4 Sheffer triples.
struct Rank4Triple {
  int b3 = 0, d3 = 0, d4 = 0;
  bool operator==(const Rank4Triple&) const = default;
  auto operator<=>(const Rank4Triple&) const = default;
};

/// Cases that contain the triple, ascending; r is set for cases 1 and 9.
std::vector<std::pair<int, std::optional<int>>> match_rank4_cases(const Rank4Triple& triple);
/// Triple of a case; r is required for cases 1 and 9.
Rank4Triple rank4_case_triple(int index, int r = 0);

ClassificationResult classify_eulerian_binomial(const GradedPoset& poset);
ClassificationResult classify_eulerian_sheffer(const GradedPoset& poset);
ClassificationResult classify_eulerian_triangular(const GradedPoset& poset);

/// Canonical poset for structural results; empty otherwise.
std::optional<GradedPoset> realize(const ClassificationResult& result);

struct ThinShefferCheck {
  int length = 0;
  int condition = 0;  ///< 1, 2 or 3 for (i), (ii), (iii)
  bool applicable = false;
  bool holds = false;
  std::string witness;

  std::string condition_name() const;
};

struct ThinShefferReport {
  std::vector<ChainCount> coatoms;
  std::vector<ThinShefferCheck> checks;

  bool all_hold() const;
};

/// Coatom conditions of thin Sheffer posets for every Sheffer interval length.
ThinShefferReport check_thin_sheffer_conditions(const GradedPoset& poset);

}  // namespace posetkit
