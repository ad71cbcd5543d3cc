#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetkit/graded_poset.hpp"

namespace posetkit {

using ElementSet = boost::dynamic_bitset<>;

/// Order relation (reflexive-transitive closure of the covers) as bitsets.
class OrderIndex {
 public:
  explicit OrderIndex(const GradedPoset& poset);

  bool leq(Element x, Element y) const { return down_[y].test(x); }
  /// { z : z >= x }
  const ElementSet& up_set(Element x) const { return up_[x]; }
  /// { z : z <= y }
  const ElementSet& down_set(Element y) const { return down_[y]; }
  ElementSet interval(Element x, Element y) const { return up_[x] & down_[y]; }
  /// Elements of rank r as a bitset.
  const ElementSet& rank_mask(int r) const { return rank_masks_[static_cast<std::size_t>(r)]; }
  const ElementSet& even_mask() const { return even_; }
  const ElementSet& odd_mask() const { return odd_; }

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> rank_masks_;
  ElementSet even_;
  ElementSet odd_;
};

/// The closed interval [x, y], re-indexed densely in increasing id order and
/// re-ranked so that rank(x) = 0. Throws NotComparable unless x <= y.
GradedPoset interval(const GradedPoset& poset, Element x, Element y);

/// Number of saturated chains from x to each element; zero where the element
/// is not above x.
std::vector<ChainCount> chain_counts_from(const GradedPoset& poset, Element x);

ChainCount count_maximal_chains(const GradedPoset& poset, Element x, Element y);

/// mu(x, z) for every z; zero where z is not above x.
std::vector<std::int64_t> mobius_row(const GradedPoset& poset, const OrderIndex& order,
                                     Element x);

std::int64_t mobius(const GradedPoset& poset, Element x, Element y);

/// Equal counts of even- and odd-rank elements in every non-singleton interval.
bool is_eulerian(const GradedPoset& poset);
bool is_eulerian(const GradedPoset& poset, const OrderIndex& order);

/// Eulerian test through the Moebius function: mu(x,y) = (-1)^(rank y - rank x).
bool is_eulerian_by_mobius(const GradedPoset& poset);

/// Connected components of P minus {bottom, top}, each closed off with a fresh
/// bottom and top, ordered by smallest contained element id.
std::vector<GradedPoset> remove_bounds_components(const GradedPoset& poset);

/// Rank- and cover-preserving bijection from p to q (indexed by p's ids), if any.
std::optional<std::vector<Element>> is_isomorphic(const GradedPoset& p, const GradedPoset& q);

/// Checks that `map` is a bijection carrying covers of p exactly onto covers of q.
bool is_cover_isomorphism(const GradedPoset& p, const GradedPoset& q,
                          const std::vector<Element>& map);

/// Order-reversed poset; ids and labels are kept.
GradedPoset dual(const GradedPoset& poset);

}  // namespace posetkit
