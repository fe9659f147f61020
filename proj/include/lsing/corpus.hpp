#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsing/parser.hpp"

namespace lsing {

/// One corpus entry: a hypersurface germ and the functions to test on it.
struct GermSpec {
  std::string name;
  std::vector<std::string> vars;
  std::string phi;
  std::vector<std::string> f_list;
  std::map<std::string, long long> expected;
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

  Polynomial parsed_phi() const { return parse_polynomial(phi, vars); }
  std::vector<Polynomial> parsed_f_list() const {
    std::vector<Polynomial> out;
    for (const auto& s : f_list) out.push_back(parse_polynomial(s, vars));
    return out;
  }

  /// Throws std::invalid_argument (or ParseError) when the record is malformed.
  void validate() const {
    if (vars.empty()) throw std::invalid_argument("germ '" + name + "': vars must be nonempty");
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
      throw std::invalid_argument("germ '" + name + "': vars must be distinct");
    for (const auto& v : vars) {
      bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
      for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) throw std::invalid_argument("germ '" + name + "': '" + v + "' is not an identifier");
    }
    (void)parsed_phi();
    (void)parsed_f_list();
    for (const auto& [key, value] : expected)
      if (!is_report_key(key)) throw std::invalid_argument("germ '" + name + "': unknown expected key '" + key + "'");
  }

  static bool is_report_key(const std::string& k) {
    static const std::set<std::string> keys{"mu_f",       "mu_X",          "tau_X",          "mu_icis",
                                            "br_direct",  "br_trivial",    "br_formula",     "br_section",
                                            "theta_quotient", "polar_mult", "euler_obstruction", "N"};
    return keys.count(k) > 0;
  }
};

/// Simple, D, E singularities in two variables, a few non-quasi-homogeneous
/// curves, and surfaces in three variables. x^2*y - z^2 is singular along
/// the y-axis and stays in as a negative control.
inline std::vector<GermSpec> builtin_corpus() {
  const std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};
  const std::vector<std::string> f2{"3*x+5*y", "y", "y+x^2"};
  const std::vector<std::string> f3{"3*x+5*y+7*z", "z", "z+x^2+y^2"};
  std::vector<GermSpec> c;
  for (int k = 1; k <= 6; ++k)
    c.push_back({"A" + std::to_string(k), xy, "x^" + std::to_string(k + 1) + "+y^2", f2,
                 {{"mu_X", k}, {"tau_X", k}, {"polar_mult", k + 1}, {"euler_obstruction", 2}},
                 {"ADE", "weighted-homogeneous", "curve"}});
  for (int k = 4; k <= 6; ++k)
    c.push_back({"D" + std::to_string(k), xy, "x^" + std::to_string(k - 1) + "+x*y^2", f2,
                 {{"mu_X", k}, {"tau_X", k}},
                 {"ADE", "weighted-homogeneous", "curve"}});
  c.push_back({"E6", xy, "x^3+y^4", f2, {{"mu_X", 6}, {"tau_X", 6}}, {"ADE", "weighted-homogeneous", "curve"}});
  c.push_back({"E7", xy, "x^3+x*y^3", f2, {{"mu_X", 7}, {"tau_X", 7}}, {"ADE", "weighted-homogeneous", "curve"}});
  c.push_back({"E8", xy, "x^3+y^5", f2, {{"mu_X", 8}, {"tau_X", 8}}, {"ADE", "weighted-homogeneous", "curve"}});
  c.push_back({"normal-crossing", xy, "x*y", f2,
               {{"mu_X", 1}, {"tau_X", 1}, {"polar_mult", 2}, {"euler_obstruction", 2}},
               {"weighted-homogeneous", "curve"}});
  c.push_back({"T-x5y5x2y2", xy, "x^5+y^5+x^2*y^2", f2, {{"mu_X", 11}, {"tau_X", 10}}, {"curve"}});
  c.push_back({"T-x4y5x2y3", xy, "x^4+y^5+x^2*y^3", f2, {}, {"curve"}});
  c.push_back({"A1-surface", xyz, "x^2+y^2+z^2", f3,
               {{"mu_X", 1}, {"tau_X", 1}, {"euler_obstruction", 0}},
               {"ADE", "weighted-homogeneous", "surface"}});
  c.push_back({"D4-surface", xyz, "x^2*y+y^3-z^2", f3, {{"mu_X", 4}, {"tau_X", 4}},
               {"ADE", "weighted-homogeneous", "surface"}});
  c.push_back({"umbrella-non-isolated", xyz, "x^2*y-z^2", f3, {}, {"surface", "non-isolated"}});
  return c;
}

}  // namespace lsing
