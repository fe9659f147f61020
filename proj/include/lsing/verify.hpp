#pragma once

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "lsing/corpus.hpp"
#include "lsing/invariants.hpp"
#include "lsing/oracle.hpp"

namespace lsing {

struct CheckResult {
  std::string property;
  std::string germ;
  std::string subject;  // f, p or witness label; empty for germ-level checks
  bool passed = false;
  std::string detail;
};

/// Reports for one germ and each f of its list, sharing the X-level data.
struct GermRun {
  GermSpec spec;
  Polynomial phi;
  HypersurfaceData data;
  std::vector<Polynomial> fs;
  std::vector<InvariantReport> reports;
  double elapsed_ms = 0;
};

inline GermRun run_germ(const GermSpec& spec, const PolarOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  GermRun run{spec, spec.parsed_phi(), {}, spec.parsed_f_list(), {}, 0};
  run.data = analyze_hypersurface(run.phi, opts);
  for (const auto& f : run.fs) run.reports.push_back(full_report(GermPair(spec.vars, run.phi, f), run.data));
  run.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

/// Linear forms used for the Tjurina routes: every coordinate, x1 + x2, and
/// in three or more variables the sum of all coordinates and x2 - x3.
inline std::vector<Polynomial> tjurina_directions(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial::variable(n, i));
  if (n >= 2) out.push_back(Polynomial::variable(n, 0) + Polynomial::variable(n, 1));
  if (n >= 3) {
    Polynomial sum(n);
    for (std::size_t i = 0; i < n; ++i) sum += Polynomial::variable(n, i);
    out.push_back(sum);
    out.push_back(Polynomial::variable(n, 1) - Polynomial::variable(n, 2));
  }
  return out;
}

struct VerifyOptions {
  PolarOptions polar;
  int oracle_cap = 40;
  bool oracle = true;
};

namespace detail {

inline CheckResult check(std::string property, const GermRun& run, std::string subject, bool ok,
                         std::string detail = {}) {
  return {std::move(property), run.spec.name, std::move(subject), ok, std::move(detail)};
}

inline std::string eq_detail(const std::string& a, const std::string& b) { return a + " vs " + b; }

}  // namespace detail

/// Replays a witness through the jet oracle, including certificate replay.
template <Field K>
CheckResult oracle_check(const std::string& germ, const BasicColengthWitness<K>& w, std::size_t nvars, int cap) {
  CheckResult c{"oracle-agreement", germ, w.label, false, {}};
  auto o = oracle::jet_module_colength(w.gens, nvars, w.rank, cap);
  if (!o) {
    c.detail = "no Nakayama certificate up to degree " + std::to_string(cap);
    return c;
  }
  bool replay = oracle::replay_certificate(w.gens, nvars, w.rank, o->certificate);
  c.passed = o->colength == w.value.value() && replay;
  c.detail = "engine " + w.value.str() + ", oracle " + std::to_string(o->colength) + " (certificate degree " +
             std::to_string(o->certificate.degree) + (replay ? ", replayed)" : ", replay FAILED)");
  return c;
}

/// Every identity of the invariants module on one germ run.
inline std::vector<CheckResult> verify_germ(const GermRun& run, const VerifyOptions& opts = {}) {
  using detail::check;
  std::vector<CheckResult> out;
  const auto& vars = run.spec.vars;
  const auto& h = run.data;
  const std::size_t n = vars.size();

  static const std::set<std::string> x_level{"mu_X", "tau_X", "theta_quotient", "polar_mult", "euler_obstruction"};
  for (const auto& [key, want] : run.spec.expected) {
    for (std::size_t i = 0; i < run.reports.size(); ++i) {
      auto got = report_value(run.reports[i], key);
      bool germ_level = x_level.count(key) > 0;
      out.push_back(check("expected:" + key, run, germ_level ? "" : run.spec.f_list[i],
                          got == ReportValue::finite(want), detail::eq_detail(got.str(), std::to_string(want))));
      if (germ_level) break;
    }
  }

  if (run.spec.has_tag("non-isolated")) {
    out.push_back(check("non-isolated-detected", run, "", !h.isolated(), "mu_X = " + h.mu.str()));
    return out;
  }
  if (!h.isolated()) {
    out.push_back(check("isolated-singularity", run, "", false, "mu_X is infinite"));
    return out;
  }

  out.push_back(check("tjurina-theta-quotient", run, "", h.theta_quotient == ReportValue::from(h.tau),
                      detail::eq_detail(h.theta_quotient.str(), h.tau.str())));
  for (const auto& p : tjurina_directions(n)) {
    auto q = tjurina_via_linear(run.phi, p);
    out.push_back(check("tjurina-linear", run, render(p, vars), q == h.tau, detail::eq_detail(q.str(), h.tau.str())));
  }

  if (n == 2)
    out.push_back(check("euler-equals-order", run, "", h.euler_obstruction == ReportValue::finite(run.phi.order()),
                        detail::eq_detail(h.euler_obstruction.str(), std::to_string(run.phi.order()))));

  if (h.polar) {
    auto r = full_report(GermPair(vars, run.phi, h.polar->p), h);
    out.push_back(check("morsification-generic-zero", run, render(h.polar->p, vars),
                        r.morsification_N == ReportValue::finite(0), "N = " + r.morsification_N.str()));
  }

  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const auto& r = run.reports[i];
    const auto& f = run.fs[i];
    const std::string& fs = run.spec.f_list[i];
    out.push_back(check("report-consistency", run, fs, r.inconsistencies.empty(),
                        r.inconsistencies.empty() ? "" : r.inconsistencies.front()));
    if (!r.finitely_determined) continue;
    out.push_back(check("bruce-roberts-routes", run, fs, r.routes_agree,
                        "direct " + r.br_direct.str() + ", trivial " + r.br_trivial.str() + ", formula " +
                            r.br_formula.str() + ", section " + r.br_section.str()));
    auto fq = df_quotient_dim(run.phi, f);
    out.push_back(check("f-independence", run, fs, fq == h.tau, detail::eq_detail(fq.str(), h.tau.str())));
    auto trivial = df_trivial_ideal(f, run.phi).colength();
    bool summands = r.mu_f.is_finite() && r.mu_icis.is_finite();
    long long sum = summands ? r.mu_f.value() + r.mu_icis.value() + h.mu.as_signed() : -1;
    out.push_back(check("trivial-route-identity", run, fs, summands && trivial == Colength::finite(sum),
                        detail::eq_detail(trivial.str(), summands ? std::to_string(sum) : "UNDEFINED")));
    if (run.spec.has_tag("weighted-homogeneous")) {
      bool ok = h.mu == h.tau && summands && r.br_direct == ReportValue::finite(r.mu_f.value() + r.mu_icis.value());
      out.push_back(check("weighted-homogeneous", run, fs, ok,
                          "mu " + h.mu.str() + ", tau " + h.tau.str() + ", br " + r.br_direct.str()));
    }
    out.push_back(check("morsification-nonnegative", run, fs,
                        r.morsification_N.is_finite() && r.morsification_N.value() >= 0,
                        "N = " + r.morsification_N.str()));
    // Swap roles when Y = f^-1(0) is an isolated singularity too.
    if (r.mu_f.is_finite()) {
      GermPair swapped(vars, f, run.phi);
      if (is_finitely_determined(swapped)) {
        auto lhs = r.br_direct.value() - br_direct(swapped).as_signed();
        auto rhs = tjurina_number(f).as_signed() - h.tau.as_signed();
        out.push_back(check("symmetry", run, fs, lhs == rhs,
                            detail::eq_detail(std::to_string(lhs), std::to_string(rhs))));
      }
    }
  }

  if (opts.oracle) {
    std::set<std::string> seen;
    auto replay = [&](const auto& ws, const std::string& suffix) {
      for (const auto& w : ws) {
        if (w.value.is_infinite()) continue;
        auto key = w.label + suffix;
        if (!seen.insert(key).second) continue;
        auto c = oracle_check(run.spec.name, w, n, opts.oracle_cap);
        c.subject = key;
        out.push_back(std::move(c));
      }
    };
    replay(h.witnesses, "");
    for (std::size_t i = 0; i < run.reports.size(); ++i) {
      std::vector<ColengthWitness> own(run.reports[i].witnesses.begin() + h.witnesses.size(),
                                       run.reports[i].witnesses.end());
      replay(own, " [f=" + run.spec.f_list[i] + "]");
    }
  }
  return out;
}

}  // namespace lsing
