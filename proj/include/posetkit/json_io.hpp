#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "posetkit/classifier.hpp"
#include "posetkit/enumerator.hpp"

namespace posetkit {

using Json = nlohmann::ordered_json;

/// { "elements": [{"id", "rank", "label"?}], "covers": [[a, b], ...] }, covers sorted.
Json poset_to_json(const GradedPoset& poset);
/// Bottom and top are inferred from ranks; labels are kept when every element has one.
GradedPoset poset_from_json(const Json& json);

/// Poset JSON, or polytope incidence JSON ({"vertices", "facets"}) turned into its face lattice.
GradedPoset load_poset(const std::filesystem::path& path);

/// Counts as decimal strings, listed from k = 1.
Json profile_to_json(const FactorialProfile& profile);
/// Row m lists B(m, m), ..., B(m, rank).
Json triangular_to_json(const TriangularProfile& profile);
Json classification_to_json(const ClassificationResult& result);
Json report_to_json(const CensusReport& report);
Json thin_report_to_json(const ThinShefferReport& report);

/// Hasse diagram drawn bottom-up, one same-rank subgraph per level.
std::string to_dot(const GradedPoset& poset);

}  // namespace posetkit
