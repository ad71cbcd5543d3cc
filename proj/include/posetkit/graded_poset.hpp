#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetkit/error.hpp"

namespace posetkit {

/// Exact, unbounded count of maximal chains.
using ChainCount = boost::multiprecision::cpp_int;

using Element = std::uint32_t;
using Cover = std::pair<Element, Element>;

/// Finite bounded graded poset stored as a ranked Hasse diagram.
///
/// Instances are immutable once built; `build` is the only way to obtain one
/// and it rejects anything that is not bounded and graded.
class GradedPoset {
 public:
  static GradedPoset build(std::size_t element_count, std::vector<int> rank_of,
                           std::vector<Cover> covers, Element bottom, Element top,
                           std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return rank_.size(); }
  int rank() const noexcept { return rank_[top_]; }
  int rank_of(Element e) const { return rank_[e]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  std::span<const Element> upper_covers(Element e) const { return up_[e]; }
  std::span<const Element> lower_covers(Element e) const { return down_[e]; }
  /// Elements of rank r in increasing id order.
  std::span<const Element> level(int r) const { return levels_[static_cast<std::size_t>(r)]; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Empty string when the poset carries no labels.
  const std::string& label_of(Element e) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Covers sorted lexicographically.
  std::vector<Cover> covers() const;
  std::size_t cover_count() const noexcept { return cover_count_; }

  const std::vector<int>& ranks() const noexcept { return rank_; }

 private:
  GradedPoset() = default;

  std::vector<int> rank_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::vector<Element>> levels_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::size_t cover_count_ = 0;
};

}  // namespace posetkit
