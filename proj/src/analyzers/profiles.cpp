#include <map>
#include <string>

#include "posetkit/analyzers.hpp"

namespace posetkit {

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Binomial: return "binomial";
    case ProfileKind::Sheffer: return "sheffer";
    case ProfileKind::Neither: return "neither";
  }
  return "neither";
}

namespace {

struct Seen {
  Element lower, upper;
  ChainCount count;
};

// First interval seen per key; later intervals must match it.
template <class Key>
class UniformityTracker {
 public:
  explicit UniformityTracker(std::string what) : what_(std::move(what)) {}

  void observe(const Key& key, Element x, Element y, const ChainCount& count) {
    if (witness_) return;
    auto [it, fresh] = first_.try_emplace(key, Seen{x, y, count});
    if (fresh || it->second.count == count) return;
    NonUniformWitness w;
    w.first_lower = it->second.lower;
    w.first_upper = it->second.upper;
    w.first_count = it->second.count;
    w.second_lower = x;
    w.second_upper = y;
    w.second_count = count;
    w.description = what_ + ": [" + std::to_string(w.first_lower) + "," +
                    std::to_string(w.first_upper) + "] has " + w.first_count.str() +
                    " maximal chains but [" + std::to_string(x) + "," + std::to_string(y) +
                    "] has " + count.str();
    witness_ = std::move(w);
  }

  bool uniform() const { return !witness_.has_value(); }
  const std::optional<NonUniformWitness>& witness() const { return witness_; }
  const ChainCount& at(const Key& key) const { return first_.at(key).count; }

 private:
  std::string what_;
  std::map<Key, Seen> first_;
  std::optional<NonUniformWitness> witness_;
};

std::vector<ChainCount> sequence(const UniformityTracker<int>& t, int up_to) {
  std::vector<ChainCount> out{ChainCount(1)};
  for (int k = 1; k <= up_to; ++k) out.push_back(t.at(k));
  return out;
}

}  // namespace

void derive_atom_functions(FactorialProfile& profile) {
  auto ratios = [](const std::vector<ChainCount>& seq, const char* name) {
    std::vector<ChainCount> out;
    if (seq.empty()) return out;
    out.push_back(ChainCount(1));
    for (std::size_t k = 1; k < seq.size(); ++k) {
      ChainCount q, r;
      boost::multiprecision::divide_qr(seq[k], seq[k - 1], q, r);
      if (!r.is_zero())
        throw PosetError(ErrorKind::StructuralError,
                         std::string(name) + "(" + std::to_string(k) + ") / " + name + "(" +
                             std::to_string(k - 1) + ") is not an integer");
      out.push_back(q);
    }
    return out;
  };
  profile.atoms = ratios(profile.binomial, "B");
  profile.coatoms = ratios(profile.sheffer, "D");
}

ProfileSummary scan_profiles(const GradedPoset& poset) {
  UniformityTracker<int> any_interval("intervals of equal length differ");
  UniformityTracker<int> anchored("intervals [bottom, y] of equal length differ");
  UniformityTracker<int> floating("intervals [x, y], x != bottom, of equal length differ");
  UniformityTracker<std::pair<int, int>> by_ranks("intervals between the same ranks differ");

  for (Element x = 0; x < poset.size(); ++x) {
    const auto row = chain_counts_from(poset, x);
    const int rx = poset.rank_of(x);
    for (Element y = 0; y < poset.size(); ++y) {
      if (row[y].is_zero() || y == x) continue;
      const int ry = poset.rank_of(y);
      const int len = ry - rx;
      any_interval.observe(len, x, y, row[y]);
      (x == poset.bottom() ? anchored : floating).observe(len, x, y, row[y]);
      by_ranks.observe({rx, ry}, x, y, row[y]);
    }
  }

  const int rank = poset.rank();
  ProfileSummary out;
  if (any_interval.uniform()) {
    FactorialProfile p;
    p.kind = ProfileKind::Binomial;
    p.binomial = sequence(any_interval, rank);
    derive_atom_functions(p);
    out.binomial.value = std::move(p);
  } else {
    out.binomial.witness = any_interval.witness();
  }
  if (anchored.uniform() && floating.uniform()) {
    FactorialProfile p;
    p.kind = ProfileKind::Sheffer;
    p.binomial = sequence(floating, rank - 1 < 0 ? 0 : rank - 1);
    p.sheffer = sequence(anchored, rank);
    derive_atom_functions(p);
    out.sheffer.value = std::move(p);
  } else {
    out.sheffer.witness = anchored.uniform() ? floating.witness() : anchored.witness();
  }
  if (by_ranks.uniform()) {
    TriangularProfile t;
    t.rank = rank;
    t.counts.assign(static_cast<std::size_t>(rank) + 1, {});
    for (int m = 0; m <= rank; ++m) {
      t.counts[m].assign(static_cast<std::size_t>(rank) + 1, ChainCount(0));
      t.counts[m][m] = 1;
      for (int n = m + 1; n <= rank; ++n) t.counts[m][n] = by_ranks.at({m, n});
    }
    out.triangular.value = std::move(t);
  } else {
    out.triangular.witness = by_ranks.witness();
  }
  return out;
}

Detection<FactorialProfile> binomial_profile(const GradedPoset& poset) {
  return scan_profiles(poset).binomial;
}

Detection<FactorialProfile> sheffer_profile(const GradedPoset& poset) {
  return scan_profiles(poset).sheffer;
}

Detection<TriangularProfile> triangular_profile(const GradedPoset& poset) {
  return scan_profiles(poset).triangular;
}

}  // namespace posetkit
