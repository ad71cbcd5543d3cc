#include "posetkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "posetkit/constructors.hpp"

namespace posetkit {

namespace {

// Entries 1.. of a factorial sequence; entry 0 is always 1 and is omitted.
Json counts(const std::vector<ChainCount>& seq) {
  Json out = Json::array();
  for (std::size_t k = 1; k < seq.size(); ++k) out.push_back(seq[k].str());
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

[[noreturn]] void bad(const std::string& what) {
  throw PosetError(ErrorKind::InvalidArgument, "poset JSON: " + what);
}

}  // namespace

Json poset_to_json(const GradedPoset& poset) {
  Json elements = Json::array();
  for (Element e = 0; e < poset.size(); ++e) {
    Json el{{"id", e}, {"rank", poset.rank_of(e)}};
    if (poset.has_labels()) el["label"] = poset.label_of(e);
    elements.push_back(std::move(el));
  }
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers()) covers.push_back({a, b});
  return Json{{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

GradedPoset poset_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("elements") || !json.contains("covers"))
    bad("expected an object with \"elements\" and \"covers\"");
  const auto& elements = json.at("elements");
  if (!elements.is_array() || elements.empty()) bad("\"elements\" must be a non-empty array");
  const std::size_t n = elements.size();
  std::vector<int> ranks(n, -1);
  std::vector<std::string> labels(n);
  std::size_t labelled = 0;
  for (const auto& el : elements) {
    if (!el.is_object() || !el.contains("id") || !el.contains("rank"))
      bad("every element needs \"id\" and \"rank\"");
    if (!el.at("id").is_number_unsigned() || !el.at("rank").is_number_integer())
      bad("\"id\" and \"rank\" must be integers");
    const auto id = el.at("id").get<std::uint64_t>();
    if (id >= n) bad("ids must be 0.." + std::to_string(n - 1));
    if (ranks[id] != -1) bad("duplicate id " + std::to_string(id));
    ranks[id] = el.at("rank").get<int>();
    if (ranks[id] < 0) bad("negative rank");
    if (el.contains("label")) {
      if (!el.at("label").is_string()) bad("labels must be strings");
      labels[id] = el.at("label").get<std::string>();
      ++labelled;
    }
  }
  std::vector<Cover> covers;
  for (const auto& c : json.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
      bad("covers must be pairs of ids");
    const auto a = c[0].get<std::uint64_t>(), b = c[1].get<std::uint64_t>();
    if (a >= n || b >= n) bad("cover endpoint out of range");
    covers.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  }
  const int top_rank = *std::max_element(ranks.begin(), ranks.end());
  Element bottom = 0, top = 0;
  for (Element e = 0; e < n; ++e) {
    if (ranks[e] == 0) bottom = e;
    if (ranks[e] == top_rank) top = e;
  }
  if (labelled != 0 && labelled != n) bad("either every element or none has a label");
  if (labelled == 0) labels.clear();
  return GradedPoset::build(n, std::move(ranks), std::move(covers), bottom, top,
                            std::move(labels));
}

GradedPoset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PosetError(ErrorKind::Io, "cannot open " + path.string());
  Json json;
  try {
    json = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(ErrorKind::Io, path.string() + ": " + e.what());
  }
  if (json.is_object() && json.contains("facets"))
    return face_lattice_from_incidence(load_incidence(path));
  return poset_from_json(json);
}

Json profile_to_json(const FactorialProfile& profile) {
  Json out{{"kind", to_string(profile.kind)}, {"B", counts(profile.binomial)}};
  if (profile.kind == ProfileKind::Sheffer) out["D"] = counts(profile.sheffer);
  return out;
}

Json triangular_to_json(const TriangularProfile& profile) {
  Json rows = Json::array();
  for (int m = 0; m <= profile.rank; ++m) {
    Json row = Json::array();
    for (int n = m; n <= profile.rank; ++n) row.push_back(profile.B(m, n).str());
    rows.push_back(std::move(row));
  }
  return Json{{"kind", "triangular"}, {"rank", profile.rank}, {"B", std::move(rows)}};
}

Json classification_to_json(const ClassificationResult& result) {
  Json out{{"form", form_name(result)}};
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, form::Boolean> || std::is_same_v<T, form::Butterfly> ||
                      std::is_same_v<T, form::CubicalFactorialType>) {
          out["n"] = f.n;
        } else if constexpr (std::is_same_v<T, form::PolygonSum>) {
          out["parts"] = f.parts;
        } else if constexpr (std::is_same_v<T, form::Rank4Case>) {
          out["case"] = f.index;
          if (f.r) out["r"] = *f.r;
          out["also_matches"] = f.also_matches;
        } else if constexpr (std::is_same_v<T, form::ThinSheffer>) {
          out["C"] = counts(f.coatoms);
        } else if constexpr (std::is_same_v<T, form::OpenCase>) {
          out["reason"] = f.reason;
          if (f.profile) out["profile"] = profile_to_json(*f.profile);
          if (f.triangular) out["profile"] = triangular_to_json(*f.triangular);
        } else {
          out["alpha"] = f.alpha;
          out["n"] = f.n;
        }
      },
      result);
  return out;
}

Json report_to_json(const CensusReport& report) {
  Json c = Json::object();
  for (const auto& [key, count] : report.counts) c[std::to_string(key)] = count;
  return Json{{"suite", report.suite},
              {"bound", report.bound},
              {"counts", std::move(c)},
              {"failures", report.failures}};
}

Json thin_report_to_json(const ThinShefferReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"length", c.length},
           {"condition", c.condition_name()},
           {"applicable", c.applicable},
           {"holds", c.holds}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return Json{{"C", counts(report.coatoms)}, {"checks", std::move(checks)},
              {"all_hold", report.all_hold()}};
}

std::string to_dot(const GradedPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (Element e = 0; e < poset.size(); ++e) {
    std::string label = std::to_string(e);
    if (poset.has_labels()) label += ": " + poset.label_of(e);
    os << "  " << e << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (int r = 0; r <= poset.rank(); ++r) {
    os << "  { rank=same;";
    for (Element e : poset.level(r)) os << ' ' << e << ';';
    os << " }\n";
  }
  for (const auto& [a, b] : poset.covers()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace posetkit
