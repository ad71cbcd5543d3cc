#include <algorithm>
#include <bit>
#include <string>

#include "posetkit/constructors.hpp"

namespace posetkit {

namespace {

void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw PosetError(kind, msg);
}

std::string subset_label(unsigned mask, int n) {
  if (mask == 0) return "{}";
  std::string s = "{";
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i + 1);
    }
  return s + "}";
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

GradedPoset boolean(int n) {
  require(n >= 1, ErrorKind::InvalidArgument, "boolean(n) needs n >= 1");
  require(n <= kMaxBooleanRank, ErrorKind::SizeLimit,
          "boolean(n) is capped at n = " + std::to_string(kMaxBooleanRank));
  const unsigned count = 1u << n;
  std::vector<int> ranks(count);
  std::vector<std::string> labels(count);
  std::vector<Cover> covers;
  for (unsigned s = 0; s < count; ++s) {
    ranks[s] = std::popcount(s);
    labels[s] = subset_label(s, n);
    for (int i = 0; i < n; ++i)
      if (!(s & (1u << i))) covers.emplace_back(s, s | (1u << i));
  }
  return GradedPoset::build(count, std::move(ranks), std::move(covers), 0, count - 1,
                            std::move(labels));
}

GradedPoset butterfly(int n) {
  require(n >= 1, ErrorKind::InvalidArgument, "butterfly(n) needs n >= 1");
  require(n <= kMaxLinearRank, ErrorKind::SizeLimit, "butterfly(n) is too large");
  // ids: 0 = bottom, (k, i) -> 2(k-1) + i for 1 <= k <= n-1, i in {1, 2}, top last
  const Element top = static_cast<Element>(2 * (n - 1) + 1);
  std::vector<int> ranks(top + 1);
  std::vector<std::string> labels(top + 1);
  std::vector<Cover> covers;
  ranks[0] = 0;
  labels[0] = "0^";
  ranks[top] = n;
  labels[top] = "1^";
  auto id = [](int k, int i) { return static_cast<Element>(2 * (k - 1) + i); };
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= 2; ++i) {
      ranks[id(k, i)] = k;
      labels[id(k, i)] = "(" + std::to_string(k) + "," + std::to_string(i) + ")";
      if (k == 1) {
        covers.emplace_back(0, id(k, i));
      } else {
        covers.emplace_back(id(k - 1, 1), id(k, i));
        covers.emplace_back(id(k - 1, 2), id(k, i));
      }
      if (k == n - 1) covers.emplace_back(id(k, i), top);
    }
  if (n == 1) covers.emplace_back(0, top);
  return GradedPoset::build(top + 1, std::move(ranks), std::move(covers), 0, top,
                            std::move(labels));
}

GradedPoset chain(int n) {
  require(n >= 0, ErrorKind::InvalidArgument, "chain(n) needs n >= 0");
  require(n <= kMaxLinearRank, ErrorKind::SizeLimit, "chain(n) is too large");
  std::vector<int> ranks(static_cast<std::size_t>(n) + 1);
  std::vector<std::string> labels(ranks.size());
  std::vector<Cover> covers;
  for (int i = 0; i <= n; ++i) {
    ranks[i] = i;
    labels[i] = std::to_string(i);
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  const std::size_t element_count = ranks.size();
  return GradedPoset::build(element_count, std::move(ranks), std::move(covers), 0,
                            static_cast<Element>(n), std::move(labels));
}

GradedPoset polygon(int q) {
  require(q >= 2, ErrorKind::DegenerateGon, "a polygon needs at least 2 vertices, got " +
                                                std::to_string(q));
  require(q <= kMaxLinearRank, ErrorKind::SizeLimit, "polygon(q) is too large");
  // ids: 0 = bottom, vertices 1..q, edges q+1..2q, top 2q+1
  const Element top = static_cast<Element>(2 * q + 1);
  std::vector<int> ranks(top + 1);
  std::vector<std::string> labels(top + 1);
  std::vector<Cover> covers;
  labels[0] = "0^";
  labels[top] = "1^";
  ranks[top] = 3;
  for (int i = 0; i < q; ++i) {
    const Element v = static_cast<Element>(1 + i);
    const Element e = static_cast<Element>(1 + q + i);
    const Element w = static_cast<Element>(1 + (i + 1) % q);
    ranks[v] = 1;
    ranks[e] = 2;
    labels[v] = "v" + std::to_string(i);
    labels[e] = "e" + std::to_string(i);
    covers.emplace_back(0, v);
    covers.emplace_back(v, e);
    covers.emplace_back(w, e);
    covers.emplace_back(e, top);
  }
  return GradedPoset::build(top + 1, std::move(ranks), std::move(covers), 0, top,
                            std::move(labels));
}

GradedPoset cubical(int n) {
  require(n >= 1, ErrorKind::InvalidArgument, "cubical(n) needs n >= 1");
  require(n <= kMaxCubicalDimension, ErrorKind::SizeLimit,
          "cubical(n) is capped at n = " + std::to_string(kMaxCubicalDimension));
  // Faces of the n-cube are words over {0, 1, *}; word index w (base 3,
  // digit 2 = '*') has id w + 1, and id 0 is the empty face.
  int words = 1;
  for (int i = 0; i < n; ++i) words *= 3;
  std::vector<int> ranks(static_cast<std::size_t>(words) + 1);
  std::vector<std::string> labels(ranks.size());
  std::vector<Cover> covers;
  labels[0] = "{}";
  for (int w = 0; w < words; ++w) {
    int stars = 0;
    std::string text(static_cast<std::size_t>(n), '0');
    int rest = w, place = 1;
    for (int i = 0; i < n; ++i, rest /= 3, place *= 3) {
      const int digit = rest % 3;
      text[static_cast<std::size_t>(i)] = "01*"[digit];
      if (digit == 2) {
        ++stars;
      } else {
        covers.emplace_back(w + 1, w + (2 - digit) * place + 1);
      }
    }
    ranks[w + 1] = stars + 1;
    labels[w + 1] = std::move(text);
    if (stars == 0) covers.emplace_back(0, w + 1);
  }
  const std::size_t element_count = ranks.size();
  return GradedPoset::build(element_count, std::move(ranks), std::move(covers), 0,
                            static_cast<Element>(words), std::move(labels));
}

GradedPoset subspace_lattice(int n, int q) {
  require(n >= 1 && n <= 4, ErrorKind::UnsupportedField,
          "subspace_lattice supports 1 <= n <= 4, got n = " + std::to_string(n));
  require(is_prime(q), ErrorKind::UnsupportedField,
          "subspace_lattice needs a prime field size, got q = " + std::to_string(q));
  int vectors = 1;
  for (int i = 0; i < n; ++i) {
    vectors *= q;
    require(vectors <= kMaxSubspaceVectors, ErrorKind::UnsupportedField,
            "F_q^n has more than " + std::to_string(kMaxSubspaceVectors) + " vectors");
  }

  using Row = std::vector<int>;
  auto encode = [&](const Row& v) {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * q + v[static_cast<std::size_t>(i)];
    return code;
  };

  struct Subspace {
    int dim;
    std::vector<bool> members;
    std::string label;
  };
  std::vector<Subspace> spaces;

  // Every subspace has a unique reduced row-echelon basis: choose pivot
  // columns, then fill the non-pivot entries to the right of each pivot.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots(static_cast<std::size_t>(k));
    auto emit_for_pivots = [&]() {
      std::vector<std::pair<int, int>> free_slots;
      for (int row = 0; row < k; ++row)
        for (int col = pivots[row] + 1; col < n; ++col)
          if (std::find(pivots.begin(), pivots.end(), col) == pivots.end())
            free_slots.emplace_back(row, col);
      std::vector<int> fill(free_slots.size(), 0);
      for (;;) {
        std::vector<Row> basis(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), 0));
        for (int row = 0; row < k; ++row) basis[row][pivots[row]] = 1;
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          basis[free_slots[s].first][free_slots[s].second] = fill[s];

        Subspace sp{k, std::vector<bool>(static_cast<std::size_t>(vectors), false), {}};
        std::vector<int> coeff(static_cast<std::size_t>(k), 0);
        for (;;) {
          Row v(static_cast<std::size_t>(n), 0);
          for (int row = 0; row < k; ++row)
            for (int col = 0; col < n; ++col) v[col] = (v[col] + coeff[row] * basis[row][col]) % q;
          sp.members[static_cast<std::size_t>(encode(v))] = true;
          int pos = 0;
          while (pos < k && ++coeff[pos] == q) coeff[pos++] = 0;
          if (pos == k) break;
        }
        std::string label = "<";
        for (int row = 0; row < k; ++row) {
          if (row) label += "|";
          for (int col = 0; col < n; ++col) label += std::to_string(basis[row][col]);
        }
        sp.label = label + ">";
        spaces.push_back(std::move(sp));

        std::size_t pos = 0;
        while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
        if (pos == fill.size()) break;
      }
    };
    // iterate pivot combinations in lexicographic order
    for (int i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
      emit_for_pivots();
      int i = k - 1;
      while (i >= 0 && pivots[i] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }

  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (const auto& s : spaces) {
    ranks.push_back(s.dim);
    labels.push_back(s.label);
  }
  auto contains = [](const Subspace& big, const Subspace& small) {
    for (std::size_t v = 0; v < small.members.size(); ++v)
      if (small.members[v] && !big.members[v]) return false;
    return true;
  };
  for (Element a = 0; a < spaces.size(); ++a)
    for (Element b = 0; b < spaces.size(); ++b)
      if (spaces[b].dim == spaces[a].dim + 1 && contains(spaces[b], spaces[a]))
        covers.emplace_back(a, b);
  return GradedPoset::build(spaces.size(), std::move(ranks), std::move(covers), 0,
                            static_cast<Element>(spaces.size() - 1), std::move(labels));
}

}  // namespace posetkit
