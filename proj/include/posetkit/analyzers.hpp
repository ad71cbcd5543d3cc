#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetkit/core.hpp"

namespace posetkit {

using Rational = boost::multiprecision::cpp_rational;

enum class ProfileKind { Binomial, Sheffer, Neither };

std::string to_string(ProfileKind kind);

/// Factorial functions of a binomial or Sheffer poset.
///
/// Sequences are indexed by interval length with entry 0 fixed to 1, so
/// `binomial[k]` is B(k). For a Binomial profile `binomial` runs up to the
/// rank and `sheffer` is empty. For a Sheffer profile `binomial` runs up to
/// rank - 1 (intervals not anchored at the bottom) and `sheffer` up to rank.
struct FactorialProfile {
  ProfileKind kind = ProfileKind::Neither;
  std::vector<ChainCount> binomial;
  std::vector<ChainCount> sheffer;
  std::vector<ChainCount> atoms;    ///< A(k) = B(k) / B(k-1)
  std::vector<ChainCount> coatoms;  ///< C(k) = D(k) / D(k-1)

  int binomial_length() const { return static_cast<int>(binomial.size()) - 1; }
  int sheffer_length() const { return static_cast<int>(sheffer.size()) - 1; }
  const ChainCount& B(int k) const { return binomial.at(static_cast<std::size_t>(k)); }
  const ChainCount& D(int k) const { return sheffer.at(static_cast<std::size_t>(k)); }
  const ChainCount& A(int k) const { return atoms.at(static_cast<std::size_t>(k)); }
  const ChainCount& C(int k) const { return coatoms.at(static_cast<std::size_t>(k)); }

  bool operator==(const FactorialProfile&) const = default;
};

/// B(m, n): chain count of any interval from rank m to rank n.
struct TriangularProfile {
  int rank = 0;
  std::vector<std::vector<ChainCount>> counts;  ///< counts[m][n], m <= n

  const ChainCount& B(int m, int n) const {
    return counts.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(n));
  }

  bool operator==(const TriangularProfile&) const = default;
};

/// Two intervals that should agree but do not.
struct NonUniformWitness {
  Element first_lower = 0, first_upper = 0;
  Element second_lower = 0, second_upper = 0;
  ChainCount first_count, second_count;
  std::string description;
};

template <class T>
struct Detection {
  std::optional<T> value;
  std::optional<NonUniformWitness> witness;

  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

Detection<FactorialProfile> binomial_profile(const GradedPoset& poset);
Detection<FactorialProfile> sheffer_profile(const GradedPoset& poset);
Detection<TriangularProfile> triangular_profile(const GradedPoset& poset);

/// All three detections from a single pass over the intervals.
struct ProfileSummary {
  Detection<FactorialProfile> binomial;
  Detection<FactorialProfile> sheffer;
  Detection<TriangularProfile> triangular;
};
ProfileSummary scan_profiles(const GradedPoset& poset);

/// Fills `atoms` and `coatoms`; throws StructuralError on a non-integral ratio.
void derive_atom_functions(FactorialProfile& profile);

/// Sum over [x, y] of (-1)^(rank z - rank x). Throws NotComparable unless x <= y.
std::int64_t euler_poincare_residual(const GradedPoset& poset, Element x, Element y);
std::int64_t euler_poincare_residual(const GradedPoset& poset, const OrderIndex& order,
                                     Element x, Element y);

/// True iff every interval's rank-level sizes equal B(n)/(B(k)B(n-k)), or
/// D(n)/(D(k)B(n-k)) for intervals anchored at the bottom of a Sheffer
/// profile, with every division exact.
bool verify_rank_count_formulas(const GradedPoset& poset, const FactorialProfile& profile);

/// sum_{k=0}^{n} (-1)^k B(n) / (B(k) B(n-k)); vanishes on Eulerian binomial posets.
Rational binomial_euler_poincare_sum(const FactorialProfile& profile, int n);

/// 1 + sum_{k=1}^{m} (-1)^k D(m) / (D(k) B(m-k)); vanishes on Eulerian Sheffer posets.
Rational sheffer_euler_poincare_sum(const FactorialProfile& profile, int m);

}  // namespace posetkit
