#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsing/corpus.hpp"
#include "lsing/invariants.hpp"

namespace lsing {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

inline Json to_json(const ReportValue& v) {
  if (v.is_finite()) return v.value();
  return v.str();
}

inline ReportValue report_value_from_json(const Json& j) {
  if (j.is_number_integer()) return ReportValue::finite(j.get<long long>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "INFINITE") return ReportValue::infinite();
    if (s == "UNDEFINED") return ReportValue::undefined();
  }
  throw std::invalid_argument("report value must be an integer, \"INFINITE\" or \"UNDEFINED\"");
}

/// The serialized form of one report.
struct ReportDocument {
  static inline const std::vector<std::string> kValueKeys{
      "mu_f",      "mu_X",       "tau_X",      "mu_icis",        "br_direct",  "br_trivial",
      "br_formula", "br_section", "theta_quotient", "polar_mult", "euler_obstruction", "N"};

  std::string version = kToolVersion;
  std::string name;
  std::vector<std::string> vars;
  std::string phi, f;
  std::map<std::string, ReportValue> values;
  bool finitely_determined = false;
  bool routes_agree = false;
  bool weighted_homogeneous_hint = false;
  std::optional<std::string> polar_p;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> warnings;
  std::vector<std::string> inconsistencies;
  std::optional<std::map<std::string, double>> timings_ms;
  std::optional<std::map<std::string, bool>> oracle_agreement;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;

  static ReportDocument from_report(const std::string& name, const std::vector<std::string>& vars,
                                    const Polynomial& phi, const Polynomial& f, const InvariantReport& r,
                                    std::uint64_t seed) {
    ReportDocument d;
    d.name = name;
    d.vars = vars;
    d.phi = render(phi, vars);
    d.f = render(f, vars);
    for (const auto& k : kValueKeys) d.values[k] = report_value(r, k);
    d.finitely_determined = r.finitely_determined;
    d.routes_agree = r.routes_agree;
    d.weighted_homogeneous_hint = r.weighted_homogeneous_hint;
    if (r.polar_p) d.polar_p = render(*r.polar_p, vars);
    d.seed = seed;
    d.warnings = r.warnings;
    d.inconsistencies = r.inconsistencies;
    return d;
  }

  Json to_json() const {
    Json j;
    j["version"] = version;
    j["name"] = name;
    j["vars"] = vars;
    j["phi"] = phi;
    j["f"] = f;
    for (const auto& k : kValueKeys) j[k] = lsing::to_json(values.at(k));
    j["finitely_determined"] = finitely_determined;
    j["routes_agree"] = routes_agree;
    j["weighted_homogeneous_hint"] = weighted_homogeneous_hint;
    j["polar_p"] = polar_p ? Json(*polar_p) : Json(nullptr);
    j["seed"] = seed;
    j["warnings"] = warnings;
    j["inconsistencies"] = inconsistencies;
    if (timings_ms) j["timings_ms"] = *timings_ms;
    if (oracle_agreement) j["oracle_agreement"] = *oracle_agreement;
    return j;
  }

  static ReportDocument from_json(const Json& j) {
    ReportDocument d;
    d.version = j.at("version").get<std::string>();
    d.name = j.at("name").get<std::string>();
    d.vars = j.at("vars").get<std::vector<std::string>>();
    d.phi = j.at("phi").get<std::string>();
    d.f = j.at("f").get<std::string>();
    for (const auto& k : kValueKeys) d.values[k] = report_value_from_json(j.at(k));
    d.finitely_determined = j.at("finitely_determined").get<bool>();
    d.routes_agree = j.at("routes_agree").get<bool>();
    d.weighted_homogeneous_hint = j.at("weighted_homogeneous_hint").get<bool>();
    if (!j.at("polar_p").is_null()) d.polar_p = j.at("polar_p").get<std::string>();
    d.seed = j.at("seed").get<std::uint64_t>();
    d.warnings = j.at("warnings").get<std::vector<std::string>>();
    d.inconsistencies = j.at("inconsistencies").get<std::vector<std::string>>();
    if (j.contains("timings_ms")) d.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    if (j.contains("oracle_agreement"))
      d.oracle_agreement = j.at("oracle_agreement").get<std::map<std::string, bool>>();
    return d;
  }
};

inline Json to_json(const GermSpec& g) {
  Json j;
  j["name"] = g.name;
  j["vars"] = g.vars;
  j["phi"] = g.phi;
  j["f_list"] = g.f_list;
  if (!g.expected.empty()) j["expected"] = g.expected;
  if (!g.tags.empty()) j["tags"] = g.tags;
  return j;
}

/// Parses and validates one GermSpec record.
inline GermSpec germ_spec_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("germ record must be a JSON object");
  GermSpec g;
  try {
    g.name = j.at("name").get<std::string>();
    g.vars = j.at("vars").get<std::vector<std::string>>();
    g.phi = j.at("phi").get<std::string>();
    g.f_list = j.at("f_list").get<std::vector<std::string>>();
    if (j.contains("expected")) g.expected = j.at("expected").get<std::map<std::string, long long>>();
    if (j.contains("tags")) g.tags = j.at("tags").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed germ record: ") + e.what());
  }
  g.validate();
  return g;
}

/// A corpus file is a JSON array of germ records.
inline std::vector<GermSpec> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("corpus file must hold a JSON array");
  std::vector<GermSpec> out;
  for (const auto& e : j) out.push_back(germ_spec_from_json(e));
  return out;
}

}  // namespace lsing
