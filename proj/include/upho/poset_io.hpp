#pragma once
#include <json.hpp>
#include <string>

#include "upho/poset.hpp"

namespace upho {

nlohmann::json poset_to_json(const GradedPoset& P);
GradedPoset poset_from_json(const nlohmann::json& j);
std::string poset_to_json_string(const GradedPoset& P);
GradedPoset poset_from_json_string(const std::string& s);

// Hasse diagram, one same-rank cluster per level, edges bottom to top
std::string poset_to_dot(const GradedPoset& P, const std::string& name = "P");

// compact human-readable listing, one line per rank
std::string poset_to_text(const GradedPoset& P);

}  // namespace upho
