#include "isotemporal/json_io.hpp"

#include <json.hpp>

namespace isotemporal {

TemporalNetwork network_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::runtime_error("network JSON needs \"vertices\" and \"edges\"");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    vertices.push_back(v.get<std::string>());
  }
  std::vector<LabeledEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                     e.at("t").get<double>()});
  }
  return TemporalNetwork::validate(std::move(vertices), edges);
}

std::string symmetry_report_json(const SymmetryProfile& profile) {
  nlohmann::ordered_json j;
  j["mirror_edge_axes"] = profile.mirror_edge_axes;
  j["skewed_mirror_edge_axes"] = profile.skewed_mirror_edge_axes;
  j["skewed_mirror_vertex_axes"] = profile.skewed_mirror_vertex_axes;
  j["rotational_folds"] = profile.rotational_folds;
  j["skewed_rotational_folds"] = profile.skewed_rotational_folds;
  j["negation_isomorphic"] = profile.negation_isomorphic;
  return j.dump();
}

std::string verification_report_json(const VerificationReport& report) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json j;
    j["n"] = check.n;
    j["check"] = check.check;
    j["formula"] = check.formula.str();
    j["oracle"] = check.oracle.str();
    j["pass"] = check.pass;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace isotemporal
