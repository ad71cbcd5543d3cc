#include "posetkit/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace posetkit {

OrderIndex::OrderIndex(const GradedPoset& poset) {
  const std::size_t n = poset.size();
  up_.assign(n, ElementSet(n));
  down_.assign(n, ElementSet(n));
  even_ = ElementSet(n);
  odd_ = ElementSet(n);
  rank_masks_.assign(static_cast<std::size_t>(poset.rank()) + 1, ElementSet(n));
  for (int r = 0; r <= poset.rank(); ++r) {
    for (Element y : poset.level(r)) {
      down_[y].set(y);
      for (Element w : poset.lower_covers(y)) down_[y] |= down_[w];
      rank_masks_[static_cast<std::size_t>(r)].set(y);
      (r % 2 == 0 ? even_ : odd_).set(y);
    }
  }
  for (int r = poset.rank(); r >= 0; --r) {
    for (Element x : poset.level(r)) {
      up_[x].set(x);
      for (Element u : poset.upper_covers(x)) up_[x] |= up_[u];
    }
  }
}

GradedPoset interval(const GradedPoset& poset, Element x, Element y) {
  if (x >= poset.size() || y >= poset.size())
    throw PosetError(ErrorKind::InvalidArgument, "interval endpoint out of range");
  OrderIndex order(poset);
  if (!order.leq(x, y))
    throw PosetError(ErrorKind::NotComparable,
                     std::to_string(x) + " is not below " + std::to_string(y));
  const ElementSet members = order.interval(x, y);
  std::vector<Element> index(poset.size(), 0);
  std::vector<Element> kept;
  for (auto e = members.find_first(); e != ElementSet::npos; e = members.find_next(e)) {
    index[e] = static_cast<Element>(kept.size());
    kept.push_back(static_cast<Element>(e));
  }
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  const int base = poset.rank_of(x);
  for (Element e : kept) {
    ranks.push_back(poset.rank_of(e) - base);
    if (poset.has_labels()) labels.push_back(poset.label_of(e));
    for (Element u : poset.upper_covers(e))
      if (members.test(u)) covers.emplace_back(index[e], index[u]);
  }
  return GradedPoset::build(kept.size(), std::move(ranks), std::move(covers), index[x], index[y],
                            std::move(labels));
}

std::vector<ChainCount> chain_counts_from(const GradedPoset& poset, Element x) {
  std::vector<ChainCount> count(poset.size());
  count[x] = 1;
  for (int r = poset.rank_of(x) + 1; r <= poset.rank(); ++r) {
    for (Element z : poset.level(r)) {
      ChainCount sum = 0;
      for (Element w : poset.lower_covers(z))
        if (!count[w].is_zero()) sum += count[w];
      count[z] = std::move(sum);
    }
  }
  return count;
}

ChainCount count_maximal_chains(const GradedPoset& poset, Element x, Element y) {
  if (x >= poset.size() || y >= poset.size())
    throw PosetError(ErrorKind::InvalidArgument, "chain endpoint out of range");
  auto counts = chain_counts_from(poset, x);
  if (counts[y].is_zero())
    throw PosetError(ErrorKind::NotComparable,
                     std::to_string(x) + " is not below " + std::to_string(y));
  return counts[y];
}

std::vector<std::int64_t> mobius_row(const GradedPoset& poset, const OrderIndex& order,
                                     Element x) {
  std::vector<std::int64_t> mu(poset.size(), 0);
  const ElementSet& above = order.up_set(x);
  mu[x] = 1;
  for (int r = poset.rank_of(x) + 1; r <= poset.rank(); ++r) {
    for (Element y : poset.level(r)) {
      if (!above.test(y)) continue;
      const ElementSet below = above & order.down_set(y);
      std::int64_t sum = 0;
      for (auto z = below.find_first(); z != ElementSet::npos; z = below.find_next(z))
        if (z != y) sum += mu[z];
      mu[y] = -sum;
    }
  }
  return mu;
}

std::int64_t mobius(const GradedPoset& poset, Element x, Element y) {
  if (x >= poset.size() || y >= poset.size())
    throw PosetError(ErrorKind::InvalidArgument, "mobius endpoint out of range");
  OrderIndex order(poset);
  if (!order.leq(x, y))
    throw PosetError(ErrorKind::NotComparable,
                     std::to_string(x) + " is not below " + std::to_string(y));
  return mobius_row(poset, order, x)[y];
}

bool is_eulerian(const GradedPoset& poset) { return is_eulerian(poset, OrderIndex(poset)); }

bool is_eulerian(const GradedPoset& poset, const OrderIndex& order) {
  for (Element x = 0; x < poset.size(); ++x) {
    const ElementSet& above = order.up_set(x);
    const ElementSet above_even = above & order.even_mask();
    const ElementSet above_odd = above & order.odd_mask();
    for (auto y = above.find_first(); y != ElementSet::npos; y = above.find_next(y)) {
      if (y == x) continue;
      const auto& down = order.down_set(static_cast<Element>(y));
      if ((above_even & down).count() != (above_odd & down).count()) return false;
    }
  }
  return true;
}

bool is_eulerian_by_mobius(const GradedPoset& poset) {
  OrderIndex order(poset);
  for (Element x = 0; x < poset.size(); ++x) {
    const auto mu = mobius_row(poset, order, x);
    const ElementSet& above = order.up_set(x);
    for (auto y = above.find_first(); y != ElementSet::npos; y = above.find_next(y)) {
      const int len = poset.rank_of(static_cast<Element>(y)) - poset.rank_of(x);
      if (mu[y] != (len % 2 == 0 ? 1 : -1)) return false;
    }
  }
  return true;
}

std::vector<GradedPoset> remove_bounds_components(const GradedPoset& poset) {
  if (poset.rank() < 2)
    throw PosetError(ErrorKind::RankTooSmall, "component decomposition needs rank >= 2");
  const std::size_t n = poset.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (Element start = 0; start < n; ++start) {
    if (start == poset.bottom() || start == poset.top() || comp[start] >= 0) continue;
    std::vector<Element> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      Element e = stack.back();
      stack.pop_back();
      auto visit = [&](Element f) {
        if (f == poset.bottom() || f == poset.top() || comp[f] >= 0) return;
        comp[f] = next;
        stack.push_back(f);
      };
      for (Element f : poset.upper_covers(e)) visit(f);
      for (Element f : poset.lower_covers(e)) visit(f);
    }
    ++next;
  }

  std::vector<GradedPoset> out;
  for (int c = 0; c < next; ++c) {
    std::vector<Element> index(n, 0);
    std::vector<Element> kept{poset.bottom()};
    for (Element e = 0; e < n; ++e)
      if (comp[e] == c) kept.push_back(e);
    kept.push_back(poset.top());
    for (Element i = 0; i < kept.size(); ++i) index[kept[i]] = i;
    std::vector<int> ranks;
    std::vector<std::string> labels;
    std::vector<Cover> covers;
    for (Element e : kept) {
      ranks.push_back(poset.rank_of(e));
      if (poset.has_labels()) labels.push_back(poset.label_of(e));
    }
    for (Element e : kept) {
      if (e == poset.top()) continue;
      for (Element u : poset.upper_covers(e)) {
        if (u == poset.top() || comp[u] == c) covers.emplace_back(index[e], index[u]);
      }
    }
    out.push_back(GradedPoset::build(kept.size(), std::move(ranks), std::move(covers), 0,
                                     static_cast<Element>(kept.size() - 1), std::move(labels)));
  }
  return out;
}

GradedPoset dual(const GradedPoset& poset) {
  std::vector<int> ranks(poset.size());
  for (Element e = 0; e < poset.size(); ++e) ranks[e] = poset.rank() - poset.rank_of(e);
  std::vector<Cover> covers;
  covers.reserve(poset.cover_count());
  for (const auto& [lo, hi] : poset.covers()) covers.emplace_back(hi, lo);
  return GradedPoset::build(poset.size(), std::move(ranks), std::move(covers), poset.top(),
                            poset.bottom(), poset.labels());
}

}  // namespace posetkit
