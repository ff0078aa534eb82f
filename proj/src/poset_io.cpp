#include "upho/poset_io.hpp"

#include <sstream>

#include "upho/error.hpp"

namespace upho {

nlohmann::json poset_to_json(const GradedPoset& P) {
  nlohmann::json j;
  j["n"] = P.size();
  j["ranks"] = P.ranks();
  auto cv = nlohmann::json::array();
  for (const auto& c : P.covers()) cv.push_back({c.lower, c.upper});
  j["covers"] = std::move(cv);
  if (P.has_labels()) j["labels"] = P.labels();
  return j;
}

GradedPoset poset_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
      throw Error(ErrorCode::BadInput, "poset JSON needs \"n\" and \"covers\"");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "n" && it.key() != "ranks" && it.key() != "covers" && it.key() != "labels")
        throw Error(ErrorCode::BadInput, "unknown poset key \"" + it.key() + "\"");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Cover> cv;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::BadInput, "cover must be a pair");
      cv.push_back({c[0].get<Element>(), c[1].get<Element>()});
    }
    std::optional<std::vector<int>> rk;
    if (j.contains("ranks")) rk = j.at("ranks").get<std::vector<int>>();
    std::vector<std::string> lab;
    if (j.contains("labels")) lab = j.at("labels").get<std::vector<std::string>>();
    return GradedPoset::build(n, std::move(cv), std::move(rk), std::move(lab));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed poset JSON: ") + e.what());
  }
}

std::string poset_to_json_string(const GradedPoset& P) { return poset_to_json(P).dump(); }

GradedPoset poset_from_json_string(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("not JSON: ") + e.what());
  }
  return poset_from_json(j);
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}
}  // namespace

std::string poset_to_dot(const GradedPoset& P, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
  for (int r = 0; r <= P.height(); ++r) {
    os << "  { rank=same;";
    for (Element x : P.level(r)) os << " n" << x << ";";
    os << " }\n";
  }
  for (Element x = 0; x < P.size(); ++x) os << "  n" << x << " [label=\"" << dot_escape(P.label(x)) << "\"];\n";
  for (const auto& c : P.covers()) os << "  n" << c.lower << " -> n" << c.upper << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_text(const GradedPoset& P) {
  std::ostringstream os;
  os << "elements " << P.size() << ", rank " << P.height() << "\n";
  for (int r = 0; r <= P.height(); ++r) {
    os << "rank " << r << " (" << P.level_size(r) << "):";
    for (Element x : P.level(r)) os << " " << P.label(x);
    os << "\n";
  }
  return os.str();
}

}  // namespace upho
