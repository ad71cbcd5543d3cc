#include <string>

#include "posetkit/analyzers.hpp"

namespace posetkit {

std::int64_t euler_poincare_residual(const GradedPoset& poset, Element x, Element y) {
  if (x >= poset.size() || y >= poset.size())
    throw PosetError(ErrorKind::InvalidArgument, "interval endpoint out of range");
  return euler_poincare_residual(poset, OrderIndex(poset), x, y);
}

std::int64_t euler_poincare_residual(const GradedPoset& poset, const OrderIndex& order,
                                     Element x, Element y) {
  if (x >= poset.size() || y >= poset.size())
    throw PosetError(ErrorKind::InvalidArgument, "interval endpoint out of range");
  if (!order.leq(x, y))
    throw PosetError(ErrorKind::NotComparable,
                     std::to_string(x) + " is not below " + std::to_string(y));
  const ElementSet members = order.interval(x, y);
  const auto even = static_cast<std::int64_t>((members & order.even_mask()).count());
  const auto odd = static_cast<std::int64_t>((members & order.odd_mask()).count());
  return poset.rank_of(x) % 2 == 0 ? even - odd : odd - even;
}

namespace {

// Exact quotient num / den, or nullopt when it is not an integer.
std::optional<ChainCount> exact_div(const ChainCount& num, const ChainCount& den) {
  if (den.is_zero()) return std::nullopt;
  ChainCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

}  // namespace

bool verify_rank_count_formulas(const GradedPoset& poset, const FactorialProfile& profile) {
  if (profile.kind == ProfileKind::Neither) return false;
  const bool sheffer = profile.kind == ProfileKind::Sheffer;
  OrderIndex order(poset);
  for (Element x = 0; x < poset.size(); ++x) {
    const ElementSet& above = order.up_set(x);
    const bool anchored = sheffer && x == poset.bottom();
    for (auto yb = above.find_first(); yb != ElementSet::npos; yb = above.find_next(yb)) {
      const auto y = static_cast<Element>(yb);
      const int n = poset.rank_of(y) - poset.rank_of(x);
      if (n == 0) continue;
      if (anchored ? n > profile.sheffer_length() : n > profile.binomial_length()) return false;
      const ElementSet members = order.interval(x, y);
      for (int k = 0; k <= n; ++k) {
        const std::size_t actual = (members & order.rank_mask(poset.rank_of(x) + k)).count();
        std::optional<ChainCount> expected;
        if (anchored) {
          if (k == 0) {
            expected = ChainCount(1);
          } else {
            expected = exact_div(profile.D(n), profile.D(k) * profile.B(n - k));
          }
        } else {
          expected = exact_div(profile.B(n), profile.B(k) * profile.B(n - k));
        }
        if (!expected || *expected != actual) return false;
      }
    }
  }
  return true;
}

Rational binomial_euler_poincare_sum(const FactorialProfile& profile, int n) {
  if (n < 0 || n > profile.binomial_length())
    throw PosetError(ErrorKind::InvalidArgument, "B(" + std::to_string(n) + ") is not available");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    Rational term(profile.B(n), profile.B(k) * profile.B(n - k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational sheffer_euler_poincare_sum(const FactorialProfile& profile, int m) {
  if (profile.kind != ProfileKind::Sheffer || m < 1 || m > profile.sheffer_length() ||
      m - 1 > profile.binomial_length())
    throw PosetError(ErrorKind::InvalidArgument, "D(" + std::to_string(m) + ") is not available");
  Rational sum = 1;
  for (int k = 1; k <= m; ++k) {
    Rational term(profile.D(m), profile.D(k) * profile.B(m - k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace posetkit
