#include "rencontres/report.hpp"

#include <json.hpp>

namespace rencontres {

std::string_view identity_tag(Identity id) {
  switch (id) {
    case Identity::easy: return "easy";
    case Identity::theorem1: return "theorem1";
    case Identity::lemma2_moment: return "lemma2_moment";
    case Identity::theorem2: return "theorem2";
    case Identity::stirling_expansion: return "stirling_expansion";
    case Identity::recursion: return "recursion";
    case Identity::binomial_transform: return "binomial_transform";
    case Identity::character_norm: return "character_norm";
  }
  return "unknown";
}

VerificationReport make_report(Identity id, ParamList params, Int lhs, Int rhs) {
  const bool ok = lhs == rhs;
  return VerificationReport{id, std::move(params), std::move(lhs), std::move(rhs), ok};
}

std::string to_json_line(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(identity_tag(report.identity));
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  j["params"] = std::move(params);
  j["lhs"] = report.lhs.str();
  j["rhs"] = report.rhs.str();
  j["ok"] = report.ok;
  return j.dump();
}

}  // namespace rencontres
