#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "json.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/core.hpp"

namespace posetkit {

namespace {

std::vector<std::string> labels_or_ids(const GradedPoset& p) {
  if (p.has_labels()) return p.labels();
  std::vector<std::string> out;
  for (Element e = 0; e < p.size(); ++e) out.push_back(std::to_string(e));
  return out;
}

}  // namespace

GradedPoset dual_suspension(const GradedPoset& poset) {
  if (poset.rank() < 1)
    throw PosetError(ErrorKind::RankTooSmall, "dual suspension needs rank >= 1");
  // Old ids are kept; the two new atoms are appended.
  const Element n = static_cast<Element>(poset.size());
  const Element a1 = n, a2 = n + 1;
  std::vector<int> ranks(n + 2);
  for (Element e = 0; e < n; ++e) ranks[e] = e == poset.bottom() ? 0 : poset.rank_of(e) + 1;
  ranks[a1] = ranks[a2] = 1;
  std::vector<Cover> covers;
  for (const auto& [lo, hi] : poset.covers()) {
    if (lo == poset.bottom()) {
      covers.emplace_back(a1, hi);
      covers.emplace_back(a2, hi);
    } else {
      covers.emplace_back(lo, hi);
    }
  }
  covers.emplace_back(poset.bottom(), a1);
  covers.emplace_back(poset.bottom(), a2);
  std::vector<std::string> labels;
  if (poset.has_labels()) {
    labels = poset.labels();
    labels.push_back("a1");
    labels.push_back("a2");
  }
  return GradedPoset::build(n + 2, std::move(ranks), std::move(covers), poset.bottom(),
                            poset.top(), std::move(labels));
}

GradedPoset suspension(const GradedPoset& poset) {
  if (poset.rank() < 1) throw PosetError(ErrorKind::RankTooSmall, "suspension needs rank >= 1");
  const Element n = static_cast<Element>(poset.size());
  const Element a1 = n, a2 = n + 1;
  std::vector<int> ranks = poset.ranks();
  ranks.push_back(poset.rank());
  ranks.push_back(poset.rank());
  ranks[poset.top()] = poset.rank() + 1;
  std::vector<Cover> covers;
  for (const auto& [lo, hi] : poset.covers()) {
    if (hi == poset.top()) {
      covers.emplace_back(lo, a1);
      covers.emplace_back(lo, a2);
    } else {
      covers.emplace_back(lo, hi);
    }
  }
  covers.emplace_back(a1, poset.top());
  covers.emplace_back(a2, poset.top());
  std::vector<std::string> labels;
  if (poset.has_labels()) {
    labels = poset.labels();
    labels.push_back("a1");
    labels.push_back("a2");
  }
  return GradedPoset::build(n + 2, std::move(ranks), std::move(covers), poset.bottom(),
                            poset.top(), std::move(labels));
}

GradedPoset box_sum(const std::vector<GradedPoset>& posets) {
  if (posets.empty()) throw PosetError(ErrorKind::InvalidArgument, "box_sum of nothing");
  const int rank = posets.front().rank();
  for (const auto& p : posets)
    if (p.rank() != rank)
      throw PosetError(ErrorKind::RankMismatch, "box_sum summands have ranks " +
                                                    std::to_string(rank) + " and " +
                                                    std::to_string(p.rank()));
  if (rank < 2) throw PosetError(ErrorKind::RankTooSmall, "box_sum needs rank >= 2");

  const bool labelled = std::any_of(posets.begin(), posets.end(),
                                    [](const GradedPoset& p) { return p.has_labels(); });
  // id 0 = shared bottom, then each summand's interior in its own id order,
  // shared top last.
  std::vector<int> ranks{0};
  std::vector<std::string> labels{"0^"};
  std::vector<Cover> covers;
  std::vector<std::vector<Element>> index(posets.size());
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const auto& p = posets[i];
    const auto names = labels_or_ids(p);
    index[i].assign(p.size(), 0);
    for (Element e = 0; e < p.size(); ++e) {
      if (e == p.bottom() || e == p.top()) continue;
      index[i][e] = static_cast<Element>(ranks.size());
      ranks.push_back(p.rank_of(e));
      labels.push_back(std::to_string(i + 1) + ":" + names[e]);
    }
  }
  const Element top = static_cast<Element>(ranks.size());
  ranks.push_back(rank);
  labels.push_back("1^");
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const auto& p = posets[i];
    index[i][p.bottom()] = 0;
    index[i][p.top()] = top;
    for (const auto& [lo, hi] : p.covers()) covers.emplace_back(index[i][lo], index[i][hi]);
  }
  if (!labelled) labels.clear();
  const std::size_t element_count = ranks.size();
  return GradedPoset::build(element_count, std::move(ranks), std::move(covers), 0, top,
                            std::move(labels));
}

GradedPoset k_summation(const GradedPoset& poset, int k) {
  if (k < 1) throw PosetError(ErrorKind::InvalidArgument, "k_summation needs k >= 1");
  return box_sum(std::vector<GradedPoset>(static_cast<std::size_t>(k), poset));
}

GradedPoset rank_product(const GradedPoset& p, const GradedPoset& q) {
  if (p.rank() != q.rank())
    throw PosetError(ErrorKind::RankMismatch, "rank product of ranks " + std::to_string(p.rank()) +
                                                  " and " + std::to_string(q.rank()));
  std::map<std::pair<Element, Element>, Element> id;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  const auto pn = labels_or_ids(p), qn = labels_or_ids(q);
  for (Element x = 0; x < p.size(); ++x)
    for (Element z : q.level(p.rank_of(x))) {
      id.emplace(std::make_pair(x, z), static_cast<Element>(ranks.size()));
      ranks.push_back(p.rank_of(x));
      labels.push_back("(" + pn[x] + "," + qn[z] + ")");
    }
  std::vector<Cover> covers;
  for (const auto& [pair, self] : id)
    for (Element xu : p.upper_covers(pair.first))
      for (Element zu : q.upper_covers(pair.second)) covers.emplace_back(self, id.at({xu, zu}));
  if (!p.has_labels() && !q.has_labels()) labels.clear();
  const std::size_t element_count = ranks.size();
  return GradedPoset::build(element_count, std::move(ranks), std::move(covers),
                            id.at({p.bottom(), q.bottom()}), id.at({p.top(), q.top()}),
                            std::move(labels));
}

void FaceIncidence::validate() const {
  if (vertex_count < 1) throw PosetError(ErrorKind::InvalidArgument, "incidence needs vertices");
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  std::set<std::vector<int>> distinct;
  for (const auto& facet : facets) {
    std::vector<int> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PosetError(ErrorKind::InvalidArgument, "facet lists a vertex twice");
    for (int v : sorted) {
      if (v < 0 || v >= vertex_count)
        throw PosetError(ErrorKind::InvalidArgument, "facet vertex " + std::to_string(v) +
                                                         " out of range");
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (static_cast<int>(sorted.size()) == vertex_count)
      throw PosetError(ErrorKind::InvalidArgument, "facet equals the full vertex set");
    if (!distinct.insert(sorted).second)
      throw PosetError(ErrorKind::InvalidArgument, "repeated facet");
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw PosetError(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " lies on no facet");
}

GradedPoset face_lattice_from_incidence(const FaceIncidence& incidence) {
  incidence.validate();
  using Face = std::vector<int>;
  std::set<Face> faces;
  std::vector<Face> facets;
  for (auto f : incidence.facets) {
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  // Closing under intersection with single facets yields every intersection
  // of a family of facets.
  std::vector<Face> frontier(facets.begin(), facets.end());
  faces.insert(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<Face> fresh;
    for (const auto& face : frontier)
      for (const auto& facet : facets) {
        Face meet;
        std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                              std::back_inserter(meet));
        if (faces.insert(meet).second) fresh.push_back(std::move(meet));
      }
    frontier = std::move(fresh);
  }
  faces.insert(Face{});
  Face all(static_cast<std::size_t>(incidence.vertex_count));
  for (int v = 0; v < incidence.vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
  faces.insert(all);

  std::vector<Face> order(faces.begin(), faces.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
  const std::size_t n = order.size();
  auto subset = [](const Face& a, const Face& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) below[i][j] = subset(order[i], order[j]);

  std::vector<Cover> covers;
  std::vector<int> ranks(n, -1);
  ranks[0] = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k) direct = !(below[i][k] && below[k][j]);
      if (!direct) continue;
      covers.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
      if (ranks[j] < 0) {
        ranks[j] = ranks[i] + 1;
      } else if (ranks[j] != ranks[i] + 1) {
        throw PosetError(ErrorKind::NotGraded, "intersection closure of the facets is not graded");
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : order) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    labels.push_back(s + "}");
  }
  return GradedPoset::build(n, std::move(ranks), std::move(covers), 0,
                            static_cast<Element>(n - 1), std::move(labels));
}

FaceIncidence load_incidence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PosetError(ErrorKind::Io, "cannot open " + path.string());
  FaceIncidence inc;
  try {
    const auto doc = nlohmann::json::parse(in);
    inc.vertex_count = doc.at("vertices").get<int>();
    inc.facets = doc.at("facets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(ErrorKind::Io, path.string() + ": " + e.what());
  }
  inc.validate();
  return inc;
}

}  // namespace posetkit
