#pragma once

#include <filesystem>
#include <vector>

#include "posetkit/graded_poset.hpp"

namespace posetkit {

/// Facet-to-vertex incidence of a polytope boundary.
struct FaceIncidence {
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;

  /// Throws InvalidArgument unless every vertex lies on some facet, no facet
  /// is the full vertex set and no two facets coincide.
  void validate() const;
};

// Size guards; requests beyond these raise SizeLimit.
inline constexpr int kMaxBooleanRank = 16;
inline constexpr int kMaxCubicalDimension = 9;
inline constexpr int kMaxLinearRank = 100000;
inline constexpr int kMaxSubspaceVectors = 4096;

GradedPoset boolean(int n);
GradedPoset butterfly(int n);
GradedPoset chain(int n);
/// Face lattice of a q-gon; q = 2 is the digon.
GradedPoset polygon(int q);
/// Face lattice of the n-cube: {0, 1, *}^n under the product order, plus a new bottom.
GradedPoset cubical(int n);
/// Subspaces of F_q^n ordered by inclusion. q must be prime, 1 <= n <= 4.
GradedPoset subspace_lattice(int n, int q);

GradedPoset dual_suspension(const GradedPoset& poset);
GradedPoset suspension(const GradedPoset& poset);
GradedPoset box_sum(const std::vector<GradedPoset>& posets);
GradedPoset k_summation(const GradedPoset& poset, int k);
/// Segre product: equal-rank pairs ordered componentwise.
GradedPoset rank_product(const GradedPoset& p, const GradedPoset& q);

GradedPoset face_lattice_from_incidence(const FaceIncidence& incidence);

/// Reads { "vertices": n, "facets": [[...], ...] }.
FaceIncidence load_incidence(const std::filesystem::path& path);

}  // namespace posetkit
