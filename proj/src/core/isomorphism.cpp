#include <algorithm>
#include <map>
#include <tuple>

#include "posetkit/core.hpp"

namespace posetkit {

namespace {

using Color = std::uint32_t;

// Joint colour refinement over both Hasse diagrams, seeded with
// (rank, up-degree, down-degree). Returns false when the colour histograms
// already differ.
bool refine_colors(const GradedPoset& p, const GradedPoset& q, std::vector<Color>& cp,
                   std::vector<Color>& cq) {
  using Signature = std::tuple<Color, std::vector<Color>, std::vector<Color>>;
  auto seed = [](const GradedPoset& g, std::vector<Color>& out,
                 std::map<std::tuple<int, std::size_t, std::size_t>, Color>& dict) {
    out.resize(g.size());
    for (Element e = 0; e < g.size(); ++e) {
      auto key = std::make_tuple(g.rank_of(e), g.upper_covers(e).size(), g.lower_covers(e).size());
      auto it = dict.try_emplace(key, static_cast<Color>(dict.size())).first;
      out[e] = it->second;
    }
  };
  std::map<std::tuple<int, std::size_t, std::size_t>, Color> seed_dict;
  seed(p, cp, seed_dict);
  seed(q, cq, seed_dict);
  std::size_t classes = seed_dict.size();

  auto histogram_matches = [&](std::size_t k) {
    std::vector<std::size_t> hp(k, 0), hq(k, 0);
    for (Color c : cp) ++hp[c];
    for (Color c : cq) ++hq[c];
    return hp == hq;
  };
  if (!histogram_matches(classes)) return false;

  for (;;) {
    std::map<Signature, Color> dict;
    auto step = [&](const GradedPoset& g, const std::vector<Color>& in, std::vector<Color>& out) {
      out.resize(g.size());
      for (Element e = 0; e < g.size(); ++e) {
        std::vector<Color> ups, downs;
        for (Element u : g.upper_covers(e)) ups.push_back(in[u]);
        for (Element d : g.lower_covers(e)) downs.push_back(in[d]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        auto it = dict.try_emplace(Signature{in[e], std::move(ups), std::move(downs)},
                                   static_cast<Color>(dict.size()))
                      .first;
        out[e] = it->second;
      }
    };
    std::vector<Color> np, nq;
    step(p, cp, np);
    step(q, cq, nq);
    cp = std::move(np);
    cq = std::move(nq);
    if (!histogram_matches(dict.size())) return false;
    if (dict.size() == classes) return true;
    classes = dict.size();
  }
}

class Matcher {
 public:
  Matcher(const GradedPoset& p, const GradedPoset& q, std::vector<Color> cp, std::vector<Color> cq)
      : p_(p), q_(q), cp_(std::move(cp)), cq_(std::move(cq)),
        map_(p.size(), kUnset), inverse_(q.size(), kUnset) {
    build_order();
    for (Element e = 0; e < q.size(); ++e) by_color_[cq_[e]].push_back(e);
  }

  std::optional<std::vector<Element>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  // Greedy order: always extend with the element having the most already
  // ordered neighbours, so candidate sets stay small.
  void build_order() {
    const std::size_t n = p_.size();
    std::vector<int> links(n, 0);
    std::vector<bool> placed(n, false);
    order_.reserve(n);
    Element next = p_.bottom();
    for (std::size_t step = 0; step < n; ++step) {
      if (step > 0) {
        int best = -1;
        for (Element e = 0; e < n; ++e) {
          if (placed[e]) continue;
          if (links[e] > best) {
            best = links[e];
            next = e;
          }
        }
      }
      placed[next] = true;
      order_.push_back(next);
      for (Element u : p_.upper_covers(next)) ++links[u];
      for (Element d : p_.lower_covers(next)) ++links[d];
    }
  }

  bool consistent(Element pe, Element qe) const {
    std::size_t mapped_up = 0, mapped_down = 0;
    for (Element u : p_.upper_covers(pe)) {
      if (map_[u] == kUnset) continue;
      ++mapped_up;
      auto ups = q_.upper_covers(qe);
      if (!std::binary_search(ups.begin(), ups.end(), map_[u])) return false;
    }
    for (Element d : p_.lower_covers(pe)) {
      if (map_[d] == kUnset) continue;
      ++mapped_down;
      auto downs = q_.lower_covers(qe);
      if (!std::binary_search(downs.begin(), downs.end(), map_[d])) return false;
    }
    std::size_t q_up = 0, q_down = 0;
    for (Element u : q_.upper_covers(qe)) q_up += inverse_[u] != kUnset;
    for (Element d : q_.lower_covers(qe)) q_down += inverse_[d] != kUnset;
    return q_up == mapped_up && q_down == mapped_down;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element pe = order_[depth];

    // Candidates come from the neighbourhood of an already mapped neighbour
    // when there is one, otherwise from the whole colour class.
    std::span<const Element> pool;
    for (Element d : p_.lower_covers(pe))
      if (map_[d] != kUnset) {
        pool = q_.upper_covers(map_[d]);
        break;
      }
    if (pool.empty())
      for (Element u : p_.upper_covers(pe))
        if (map_[u] != kUnset) {
          pool = q_.lower_covers(map_[u]);
          break;
        }
    if (pool.empty()) {
      auto it = by_color_.find(cp_[pe]);
      if (it == by_color_.end()) return false;
      pool = it->second;
    }

    for (Element qe : pool) {
      if (inverse_[qe] != kUnset || cq_[qe] != cp_[pe]) continue;
      if (!consistent(pe, qe)) continue;
      map_[pe] = qe;
      inverse_[qe] = pe;
      if (search(depth + 1)) return true;
      map_[pe] = kUnset;
      inverse_[qe] = kUnset;
    }
    return false;
  }

  const GradedPoset& p_;
  const GradedPoset& q_;
  std::vector<Color> cp_, cq_;
  std::vector<Element> map_, inverse_;
  std::vector<Element> order_;
  std::map<Color, std::vector<Element>> by_color_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const GradedPoset& p, const GradedPoset& q) {
  if (p.size() != q.size() || p.rank() != q.rank() || p.cover_count() != q.cover_count())
    return std::nullopt;
  for (int r = 0; r <= p.rank(); ++r)
    if (p.level(r).size() != q.level(r).size()) return std::nullopt;
  std::vector<Color> cp, cq;
  if (!refine_colors(p, q, cp, cq)) return std::nullopt;
  Matcher matcher(p, q, std::move(cp), std::move(cq));
  return matcher.run();
}

bool is_cover_isomorphism(const GradedPoset& p, const GradedPoset& q,
                          const std::vector<Element>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Element e : map) {
    if (e >= q.size() || hit[e]) return false;
    hit[e] = true;
  }
  if (p.cover_count() != q.cover_count()) return false;
  for (const auto& [lo, hi] : p.covers()) {
    auto ups = q.upper_covers(map[lo]);
    if (!std::binary_search(ups.begin(), ups.end(), map[hi])) return false;
  }
  for (Element e = 0; e < p.size(); ++e)
    if (p.rank_of(e) != q.rank_of(map[e])) return false;
  return true;
}

}  // namespace posetkit
