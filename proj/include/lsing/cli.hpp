#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lsing/json_io.hpp"
#include "lsing/verify.hpp"

namespace lsing::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kInputError = 2 };

struct Options {
  std::vector<std::string> vars;
  std::string phi;
  std::vector<std::string> f;
  std::vector<std::string> p;
  std::string name = "cli";
  std::uint64_t seed = kDefaultSeed;
  std::size_t draws = 8;
  int cap = 40;
  std::string format = "json";
  std::string corpus = "builtin";
  unsigned jobs = 0;
  bool timings = false;
  bool no_oracle = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results are stored
/// by index; the first exception (in index order) is rethrown.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, F fn) {
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<GermSpec> load_corpus(const std::string& which) {
  if (which == "builtin") return builtin_corpus();
  std::ifstream in(which);
  if (!in) throw InputError("cannot open corpus file '" + which + "'");
  try {
    return corpus_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("corpus file '" + which + "': " + e.what());
  }
}

inline PolarOptions polar_options(const Options& o) { return {o.draws, o.seed}; }

inline GermSpec germ_from_flags(const Options& o) {
  if (o.vars.empty()) throw InputError("--vars is required");
  if (o.phi.empty()) throw InputError("--phi is required");
  GermSpec g{o.name, o.vars, o.phi, o.f, {}, {}};
  g.validate();
  return g;
}

inline std::map<std::string, bool> oracle_flags(const InvariantReport& r, std::size_t nvars, int cap) {
  std::map<std::string, bool> flags;
  for (const auto& w : r.witnesses)
    if (w.value.is_finite()) flags[w.label] = oracle_check("", w, nvars, cap).passed;
  return flags;
}

inline std::vector<ReportDocument> documents(const GermRun& run, const Options& o) {
  std::vector<ReportDocument> docs;
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const auto& r = run.reports[i];
    auto d = ReportDocument::from_report(run.spec.name, run.spec.vars, run.phi, run.fs[i], r, o.seed);
    if (o.timings) d.timings_ms = r.timings_ms;
    if (!o.no_oracle) d.oracle_agreement = oracle_flags(r, run.spec.vars.size(), o.cap);
    docs.push_back(std::move(d));
  }
  return docs;
}

inline void print_document_text(std::ostream& out, const ReportDocument& d) {
  auto line = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(26) << k << v << '\n'; };
  line("name", d.name);
  std::string vars;
  for (const auto& v : d.vars) vars += (vars.empty() ? "" : ",") + v;
  line("vars", vars);
  line("phi", d.phi);
  line("f", d.f);
  for (const auto& k : ReportDocument::kValueKeys) line(k, d.values.at(k).str());
  line("finitely_determined", d.finitely_determined ? "true" : "false");
  line("routes_agree", d.routes_agree ? "true" : "false");
  line("weighted_homogeneous_hint", d.weighted_homogeneous_hint ? "true" : "false");
  line("polar_p", d.polar_p.value_or("-"));
  line("seed", std::to_string(d.seed));
  for (const auto& w : d.warnings) line("warning", w);
  for (const auto& w : d.inconsistencies) line("inconsistency", w);
  if (d.oracle_agreement)
    for (const auto& [k, ok] : *d.oracle_agreement) line("oracle:" + k, ok ? "agree" : "DISAGREE");
  if (d.timings_ms)
    for (const auto& [k, ms] : *d.timings_ms) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << ms << " ms";
      line("time:" + k, s.str());
    }
}

inline void print_documents(std::ostream& out, const std::vector<ReportDocument>& docs, const Options& o,
                            bool as_array) {
  if (o.format == "json") {
    if (!as_array && docs.size() == 1) {
      out << docs.front().to_json().dump(2) << '\n';
      return;
    }
    Json arr = Json::array();
    for (const auto& d : docs) arr.push_back(d.to_json());
    out << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out << '\n';
    print_document_text(out, docs[i]);
  }
}

inline int print_checks(std::ostream& out, const std::vector<CheckResult>& checks, const Options& o) {
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks)
      arr.push_back(Json{{"property", c.property},
                         {"germ", c.germ},
                         {"subject", c.subject},
                         {"passed", c.passed},
                         {"detail", c.detail}});
    out << Json{{"checks", arr}, {"total", checks.size()}, {"failed", failed}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.property << std::setw(24) << c.germ;
      if (!c.subject.empty()) out << '[' << c.subject << "] ";
      out << c.detail << '\n';
    }
    out << checks.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kAssertionFailed;
}

inline std::vector<GermRun> run_corpus(const std::vector<GermSpec>& corpus, const Options& o) {
  return parallel_map<GermRun>(corpus.size(), o.jobs, [&](std::size_t i) { return run_germ(corpus[i], polar_options(o)); });
}

inline int cmd_report(const Options& o, std::ostream& out) {
  auto spec = germ_from_flags(o);
  if (spec.f_list.empty()) throw InputError("--f is required");
  auto run = run_germ(spec, polar_options(o));
  print_documents(out, documents(run, o), o, false);
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  auto corpus = load_corpus(o.corpus);
  VerifyOptions vo{polar_options(o), o.cap, !o.no_oracle};
  auto per_germ = parallel_map<std::vector<CheckResult>>(corpus.size(), o.jobs, [&](std::size_t i) {
    return verify_germ(run_germ(corpus[i], vo.polar), vo);
  });
  std::vector<CheckResult> all;
  for (auto& v : per_germ) all.insert(all.end(), v.begin(), v.end());
  return print_checks(out, all, o);
}

/// Reports for every corpus pair; asserts expected values and internal consistency.
inline int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  auto corpus = load_corpus(o.corpus);
  auto runs = run_corpus(corpus, o);
  std::vector<ReportDocument> docs;
  bool ok = true;
  for (const auto& run : runs) {
    auto ds = documents(run, o);
    for (const auto& [key, want] : run.spec.expected)
      for (const auto& d : ds)
        if (!(d.values.at(key) == ReportValue::finite(want))) {
          ok = false;
          err << run.spec.name << " [" << d.f << "]: " << key << " = " << d.values.at(key).str() << ", expected "
              << want << '\n';
        }
    for (const auto& d : ds) {
      for (const auto& msg : d.inconsistencies) {
        ok = false;
        err << run.spec.name << " [" << d.f << "]: " << msg << '\n';
      }
      if (d.oracle_agreement)
        for (const auto& [label, agree] : *d.oracle_agreement)
          if (!agree) {
            ok = false;
            err << run.spec.name << " [" << d.f << "]: oracle disagrees on " << label << '\n';
          }
    }
    docs.insert(docs.end(), ds.begin(), ds.end());
  }
  print_documents(out, docs, o, true);
  return ok ? kOk : kAssertionFailed;
}

inline int cmd_tau_routes(const Options& o, std::ostream& out) {
  auto spec = germ_from_flags(o);
  auto phi = spec.parsed_phi();
  auto data = analyze_hypersurface(phi, polar_options(o));
  if (!data.isolated()) throw InputError("phi must have an isolated singularity (mu_X is INFINITE)");
  std::vector<Polynomial> ps;
  for (const auto& s : o.p) ps.push_back(parse_polynomial(s, spec.vars));
  if (ps.empty()) ps = tjurina_directions(spec.vars.size());
  for (const auto& p : ps)
    if (!is_linear_form(p)) throw InputError("--p must be a linear form, got '" + render(p, spec.vars) + "'");

  auto tau = ReportValue::from(data.tau);
  bool ok = data.theta_quotient == tau;
  std::vector<std::pair<std::string, ReportValue>> rows;
  for (const auto& p : ps) {
    auto q = ReportValue::from(tjurina_via_linear(phi, p));
    ok = ok && q == tau;
    rows.emplace_back(render(p, spec.vars), q);
  }
  if (o.format == "json") {
    Json j;
    j["phi"] = render(phi, spec.vars);
    j["tau_X"] = to_json(tau);
    j["theta_quotient"] = to_json(data.theta_quotient);
    Json routes = Json::array();
    for (const auto& [p, q] : rows) routes.push_back(Json{{"p", p}, {"value", to_json(q)}, {"agrees", q == tau}});
    j["linear_routes"] = routes;
    j["all_agree"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(18) << "tau_X" << tau.str() << '\n';
    out << std::setw(18) << "theta_quotient" << data.theta_quotient.str() << '\n';
    for (const auto& [p, q] : rows)
      out << std::setw(18) << ("p = " + p) << q.str() << (q == tau ? "" : "  (differs)") << '\n';
  }
  return ok ? kOk : kAssertionFailed;
}

/// Replays every finite colength of the reports through the jet oracle.
inline int cmd_oracle_check(const Options& o, std::ostream& out, bool from_flags) {
  std::vector<GermSpec> corpus = from_flags ? std::vector<GermSpec>{germ_from_flags(o)} : load_corpus(o.corpus);
  auto runs = run_corpus(corpus, o);
  std::vector<CheckResult> checks;
  for (const auto& run : runs) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < std::max<std::size_t>(run.reports.size(), 1); ++i) {
      const auto& ws = run.reports.empty() ? run.data.witnesses : run.reports[i].witnesses;
      for (const auto& w : ws) {
        if (!w.value.is_finite()) continue;
        bool shared = i < run.reports.size() &&
                      std::any_of(run.data.witnesses.begin(), run.data.witnesses.end(),
                                  [&](const auto& h) { return h.label == w.label; });
        auto key = shared || run.reports.empty() ? w.label : w.label + " [f=" + run.spec.f_list[i] + "]";
        if (!seen.insert(key).second) continue;
        auto c = oracle_check(run.spec.name, w, run.spec.vars.size(), o.cap);
        c.subject = key;
        checks.push_back(std::move(c));
      }
    }
  }
  return print_checks(out, checks, o);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

/// Entry point shared by the lsing executable and the tests. args excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruce-Roberts numbers and related invariants of hypersurface germs", "lsing"};
  app.require_subcommand(1);
  Options o;
  std::string vars_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for random linear forms");
    sub->add_option("--draws", o.draws, "random draws for the polar multiplicity")->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "jet oracle degree cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--jobs", o.jobs, "worker threads (0 = hardware concurrency)");
    sub->add_flag("--no-oracle", o.no_oracle, "skip jet oracle replays");
  };
  auto add_germ = [&](CLI::App* sub, bool f_required) {
    sub->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    sub->add_option("--phi", o.phi, "defining equation of X")->required();
    auto f = sub->add_option("--f", o.f, "function germ on X (repeatable)");
    if (f_required) f->required();
    sub->add_option("--name", o.name, "germ name in the output");
  };

  auto report = app.add_subcommand("report", "all invariants of (f, X)");
  add_germ(report, true);
  add_common(report);
  report->add_flag("--timings", o.timings, "include per-route timings");

  auto verify = app.add_subcommand("verify", "check every identity on a corpus");
  verify->add_option("--corpus", o.corpus, "builtin or a JSON corpus file");
  add_common(verify);

  auto corpus = app.add_subcommand("corpus", "reports for every pair of a corpus");
  corpus->add_option("--corpus", o.corpus, "builtin or a JSON corpus file");
  corpus->add_flag("--timings", o.timings, "include per-route timings");
  add_common(corpus);

  auto tau = app.add_subcommand("tau-routes", "tau_X through the tangent-field quotient and linear forms");
  tau->add_option("--vars", vars_csv, "comma-separated variable names")->required();
  tau->add_option("--phi", o.phi, "defining equation of X")->required();
  tau->add_option("--p", o.p, "linear form (repeatable; default: coordinates and simple sums)");
  add_common(tau);

  auto oracle = app.add_subcommand("oracle-check", "replay every colength through the jet oracle");
  oracle->add_option("--vars", vars_csv, "comma-separated variable names");
  oracle->add_option("--phi", o.phi, "defining equation of X");
  oracle->add_option("--f", o.f, "function germ on X (repeatable)");
  oracle->add_option("--corpus", o.corpus, "builtin or a JSON corpus file");
  add_common(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!vars_csv.empty()) o.vars = split_commas(vars_csv);

  try {
    if (report->parsed()) return cmd_report(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (corpus->parsed()) return cmd_corpus(o, out, err);
    if (tau->parsed()) return cmd_tau_routes(o, out);
    if (oracle->parsed()) return cmd_oracle_check(o, out, !o.phi.empty());
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lsing::cli
