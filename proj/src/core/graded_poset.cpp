#include "posetkit/graded_poset.hpp"

#include <algorithm>
#include <string>

namespace posetkit {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw PosetError(kind, msg); }

std::string el(Element e) { return "element " + std::to_string(e); }

}  // namespace

GradedPoset GradedPoset::build(std::size_t element_count, std::vector<int> rank_of,
                               std::vector<Cover> covers, Element bottom, Element top,
                               std::vector<std::string> labels) {
  if (element_count == 0) fail(ErrorKind::InvalidArgument, "a poset needs at least one element");
  if (rank_of.size() != element_count)
    fail(ErrorKind::InvalidArgument, "rank_of has " + std::to_string(rank_of.size()) +
                                         " entries for " + std::to_string(element_count) +
                                         " elements");
  if (!labels.empty() && labels.size() != element_count)
    fail(ErrorKind::InvalidArgument, "label count does not match element count");
  if (bottom >= element_count || top >= element_count)
    fail(ErrorKind::InvalidArgument, "bottom/top out of range");

  int max_rank = 0;
  std::size_t rank0 = 0;
  for (std::size_t e = 0; e < element_count; ++e) {
    if (rank_of[e] < 0) fail(ErrorKind::InvalidArgument, el(static_cast<Element>(e)) + " has negative rank");
    max_rank = std::max(max_rank, rank_of[e]);
    if (rank_of[e] == 0) ++rank0;
  }
  if (rank0 != 1) {
    if (rank0 == 0) fail(ErrorKind::NotGraded, "no element of rank 0");
    fail(ErrorKind::MultipleMinima, std::to_string(rank0) + " elements of rank 0");
  }
  std::size_t at_max = static_cast<std::size_t>(
      std::count(rank_of.begin(), rank_of.end(), max_rank));
  if (at_max != 1) fail(ErrorKind::MultipleMaxima, std::to_string(at_max) + " elements of maximal rank");
  if (rank_of[bottom] != 0) fail(ErrorKind::InvalidArgument, "declared bottom does not have rank 0");
  if (rank_of[top] != max_rank) fail(ErrorKind::InvalidArgument, "declared top does not have maximal rank");

  GradedPoset p;
  p.up_.assign(element_count, {});
  p.down_.assign(element_count, {});
  for (const auto& [lo, hi] : covers) {
    if (lo >= element_count || hi >= element_count)
      fail(ErrorKind::InvalidArgument, "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                           ") references a missing element");
    if (rank_of[hi] != rank_of[lo] + 1)
      fail(ErrorKind::NotGraded, "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                     ") does not raise the rank by exactly one");
    p.up_[lo].push_back(hi);
    p.down_[hi].push_back(lo);
  }
  for (std::size_t e = 0; e < element_count; ++e) {
    std::sort(p.up_[e].begin(), p.up_[e].end());
    std::sort(p.down_[e].begin(), p.down_[e].end());
    if (std::adjacent_find(p.up_[e].begin(), p.up_[e].end()) != p.up_[e].end())
      fail(ErrorKind::InvalidArgument, "duplicate cover above " + el(static_cast<Element>(e)));
  }
  for (std::size_t e = 0; e < element_count; ++e) {
    const bool no_down = p.down_[e].empty() && e != bottom;
    const bool no_up = p.up_[e].empty() && e != top;
    if (element_count > 1 && p.down_[e].empty() && p.up_[e].empty())
      fail(ErrorKind::DanglingElement, el(static_cast<Element>(e)) + " is not connected to the poset");
    if (no_down) fail(ErrorKind::NotGraded, el(static_cast<Element>(e)) + " covers nothing");
    if (no_up) fail(ErrorKind::NotGraded, el(static_cast<Element>(e)) + " is covered by nothing");
  }

  p.levels_.assign(static_cast<std::size_t>(max_rank) + 1, {});
  for (std::size_t e = 0; e < element_count; ++e)
    p.levels_[static_cast<std::size_t>(rank_of[e])].push_back(static_cast<Element>(e));
  p.rank_ = std::move(rank_of);
  p.labels_ = std::move(labels);
  p.bottom_ = bottom;
  p.top_ = top;
  p.cover_count_ = covers.size();
  return p;
}

const std::string& GradedPoset::label_of(Element e) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_[e];
}

std::vector<Cover> GradedPoset::covers() const {
  std::vector<Cover> out;
  out.reserve(cover_count_);
  for (Element e = 0; e < size(); ++e)
    for (Element u : up_[e]) out.emplace_back(e, u);
  return out;
}

}  // namespace posetkit
