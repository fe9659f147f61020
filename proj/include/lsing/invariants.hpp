#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lsing/errors.hpp"
#include "lsing/standard_basis.hpp"
#include "lsing/tangent_fields.hpp"

namespace lsing {

/// A report entry: a (possibly negative) integer, INFINITE, or UNDEFINED when
/// a precondition failed upstream.
class ReportValue {
 public:
  enum class Kind { finite, infinite, undefined };

  ReportValue() = default;
  static ReportValue finite(long long v) { return ReportValue(Kind::finite, v); }
  static ReportValue infinite() { return ReportValue(Kind::infinite, 0); }
  static ReportValue undefined() { return ReportValue(Kind::undefined, 0); }
  static ReportValue from(const Colength& c) { return c.is_finite() ? finite(c.as_signed()) : infinite(); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  long long value() const {
    if (!is_finite()) throw std::domain_error("value() of non-finite report entry " + str());
    return value_;
  }
  std::string str() const {
    switch (kind_) {
      case Kind::finite: return std::to_string(value_);
      case Kind::infinite: return "INFINITE";
      default: return "UNDEFINED";
    }
  }

  friend bool operator==(const ReportValue&, const ReportValue&) = default;

 private:
  ReportValue(Kind k, long long v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::undefined;
  long long value_ = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// (X, 0) = phi^-1(0) together with a function germ f on the same space.
template <Field K>
struct BasicGermPair {
  std::vector<std::string> vars;
  BasicPolynomial<K> phi;
  BasicPolynomial<K> f;

  BasicGermPair(std::vector<std::string> v, BasicPolynomial<K> p, BasicPolynomial<K> g)
      : vars(std::move(v)), phi(std::move(p)), f(std::move(g)) {
    if (phi.nvars() != f.nvars() || phi.nvars() != vars.size())
      throw DimensionMismatch("germ pair: variable count mismatch");
    if (phi.constant_term() != K(0)) throw PreconditionError("germ pair: phi(0) != 0");
    if (f.constant_term() != K(0)) throw PreconditionError("germ pair: f(0) != 0");
  }
  std::size_t nvars() const { return vars.size(); }
};
using GermPair = BasicGermPair<Rational>;

namespace detail {

template <Field K>
void require_vanishing(const BasicPolynomial<K>& g, const char* what) {
  if (g.constant_term() != K(0)) throw PreconditionError(std::string(what) + ": nonzero constant term");
}

template <Field K>
std::vector<BasicPolynomial<K>> with(std::vector<BasicPolynomial<K>> gens, const BasicPolynomial<K>& extra) {
  gens.insert(gens.begin(), extra);
  return gens;
}

/// All 2x2 minors of the Jacobian matrix of (f, g).
template <Field K>
std::vector<BasicPolynomial<K>> jacobian_minors(const BasicPolynomial<K>& f, const BasicPolynomial<K>& g) {
  std::vector<BasicPolynomial<K>> out;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    for (std::size_t j = i + 1; j < f.nvars(); ++j) out.push_back(jacobian_minor(f, g, i, j));
  return out;
}

inline long long sign_power(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Single invariants

template <Field K>
Colength milnor_number(const BasicPolynomial<K>& f) {
  detail::require_vanishing(f, "milnor_number");
  return BasicIdeal<K>(f.nvars(), gradient(f)).colength();
}

template <Field K>
Colength tjurina_number(const BasicPolynomial<K>& phi) {
  detail::require_vanishing(phi, "tjurina_number");
  return BasicIdeal<K>(phi.nvars(), detail::with(gradient(phi), phi)).colength();
}

/// mu(phi, f) through the Le-Greuel identity.
template <Field K>
long long icis_milnor(const BasicPolynomial<K>& phi, const BasicPolynomial<K>& f) {
  auto mu = milnor_number(phi);
  if (mu.is_infinite()) throw PreconditionError("icis_milnor: phi is not an isolated singularity");
  auto c = BasicIdeal<K>(phi.nvars(), detail::with(detail::jacobian_minors(f, phi), phi)).colength();
  if (c.is_infinite()) throw PreconditionError("icis_milnor: (phi, f) is not an ICIS");
  return c.as_signed() - mu.as_signed();
}

template <Field K>
bool is_finitely_determined(const BasicGermPair<K>& g) {
  return df_trivial_ideal(g.f, g.phi).colength().is_finite();
}

template <Field K>
Colength br_direct(const BasicGermPair<K>& g) {
  return df_ideal(g.f, theta_x(g.phi)).colength();
}

template <Field K>
long long br_via_trivial(const BasicGermPair<K>& g) {
  auto c = df_trivial_ideal(g.f, g.phi).colength();
  if (c.is_infinite()) throw NotFinitelyDetermined("br_via_trivial: df(Theta_X^T) has infinite colength");
  auto tau = tjurina_number(g.phi);
  if (tau.is_infinite()) throw PreconditionError("br_via_trivial: phi is not an isolated singularity");
  return c.as_signed() - tau.as_signed();
}

template <Field K>
long long br_via_formula(const BasicGermPair<K>& g) {
  auto mf = milnor_number(g.f), mx = milnor_number(g.phi), tau = tjurina_number(g.phi);
  if (mf.is_infinite() || mx.is_infinite() || tau.is_infinite())
    throw PreconditionError("br_via_formula: a summand is infinite");
  return mf.as_signed() + icis_milnor(g.phi, g.f) + mx.as_signed() - tau.as_signed();
}

template <Field K>
long long br_via_section(const BasicGermPair<K>& g) {
  auto c = BasicIdeal<K>(g.nvars(), detail::with(detail::jacobian_minors(g.f, g.phi), g.f)).colength();
  auto mx = milnor_number(g.phi), tau = tjurina_number(g.phi);
  if (c.is_infinite() || mx.is_infinite() || tau.is_infinite())
    throw PreconditionError("br_via_section: infinite colength");
  return c.as_signed() + mx.as_signed() - tau.as_signed();
}

template <Field K>
Colength theta_quotient_dim(const BasicPolynomial<K>& phi) {
  const std::size_t n = phi.nvars();
  return quotient_dimension(n, n, theta_x(phi), trivial_generators(phi));
}

template <Field K>
bool is_linear_form(const BasicPolynomial<K>& p) {
  if (p.is_zero()) return false;
  for (const auto& t : p.terms())
    if (t.mono.degree() != 1) return false;
  return true;
}

/// dim dp(Theta_X) / dp(Theta_X^T) for a non-zero linear form p.
template <Field K>
Colength tjurina_via_linear(const BasicPolynomial<K>& phi, const BasicPolynomial<K>& p) {
  if (!is_linear_form(p)) throw std::invalid_argument("tjurina_via_linear: p must be a non-zero linear form");
  return quotient_dimension(df_ideal(p, theta_x(phi)).generators(), df_trivial_ideal(p, phi).generators());
}

/// f-version of the same quotient: dim df(Theta_X) / df(Theta_X^T).
template <Field K>
Colength df_quotient_dim(const BasicPolynomial<K>& phi, const BasicPolynomial<K>& f) {
  return quotient_dimension(df_ideal(f, theta_x(phi)).generators(), df_trivial_ideal(f, phi).generators());
}

struct PolarOptions {
  std::size_t draws = 8;
  std::uint64_t seed = kDefaultSeed;
};

template <Field K>
struct BasicPolarResult {
  Colength value;
  BasicPolynomial<K> p;  // a minimizing linear form
  std::size_t draws_used = 0;
  std::vector<std::string> warnings;
};
using PolarResult = BasicPolarResult<Rational>;

/// m_{n-1}: minimum of colength(<phi> + J(p, phi)) over random linear p.
template <Field K>
BasicPolarResult<K> polar_multiplicity(const BasicPolynomial<K>& phi, const PolarOptions& opts = {}) {
  if (opts.draws < 2) throw std::invalid_argument("polar_multiplicity: draws must be at least 2");
  if (milnor_number(phi).is_infinite())
    throw PreconditionError("polar_multiplicity: phi is not an isolated singularity");
  const std::size_t n = phi.nvars();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto draw = [&] {
    while (true) {
      std::vector<Term<K>> terms;
      for (std::size_t i = 0; i < n; ++i)
        if (int c = coeff(rng); c != 0) terms.push_back({Monomial::variable(n, i), K(c)});
      if (!terms.empty()) return BasicPolynomial<K>::from_terms(n, std::move(terms));
    }
  };

  BasicPolarResult<K> r{Colength::infinite(), BasicPolynomial<K>(n), 0, {}};
  std::size_t hits = 0;
  auto run = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      auto p = draw();
      auto c = BasicIdeal<K>(n, detail::with(detail::jacobian_minors(p, phi), phi)).colength();
      ++r.draws_used;
      if (c.is_infinite()) continue;
      if (r.value.is_infinite() || c.value() < r.value.value()) {
        r.value = c;
        r.p = p;
        hits = 1;
      } else if (c == r.value) {
        ++hits;
      }
    }
  };
  run(opts.draws);
  if (hits < 2) {
    r.warnings.push_back("polar multiplicity minimum attained once in " + std::to_string(opts.draws) +
                         " draws; doubling the draw count");
    run(opts.draws);
    if (hits < 2) r.warnings.push_back("polar multiplicity minimum still attained only once");
  }
  if (r.value.is_infinite()) throw PreconditionError("polar_multiplicity: every draw gave infinite colength");
  return r;
}

/// Eu(X,0) = mu_BR(p,X) + tau - mu + (-1)^n with mu_BR(p,X) = m_{n-1} - tau.
template <Field K>
long long euler_obstruction(const BasicPolynomial<K>& phi, const PolarOptions& opts = {}) {
  auto m = polar_multiplicity(phi, opts).value;
  auto mu = milnor_number(phi);
  return m.as_signed() - mu.as_signed() + detail::sign_power(phi.nvars());
}

/// N = mu_BR - mu(f) - m_{n-1} + tau. Not clamped: a negative value is returned as is.
template <Field K>
long long morsification_count(const BasicGermPair<K>& g, const PolarOptions& opts = {}) {
  auto br = br_direct(g);
  if (br.is_infinite()) throw NotFinitelyDetermined("morsification_count: pair is not finitely determined");
  auto mf = milnor_number(g.f);
  if (mf.is_infinite()) throw PreconditionError("morsification_count: mu(f) is infinite");
  auto m = polar_multiplicity(g.phi, opts).value;
  return br.as_signed() - mf.as_signed() - m.as_signed() + tjurina_number(g.phi).as_signed();
}

// ---------------------------------------------------------------------------
// Reports

/// A colength computed for a report, kept so the jet oracle can replay it.
template <Field K>
struct BasicColengthWitness {
  std::string label;
  std::size_t rank = 1;
  std::vector<BasicPolyVector<K>> gens;
  Colength value;
};

/// Invariants depending on X only; computed once per germ and shared by
/// every f.
template <Field K>
struct BasicHypersurfaceData {
  BasicPolynomial<K> phi;
  Colength mu, tau;
  std::vector<BasicVectorField<K>> theta;  // empty unless mu is finite
  ReportValue theta_quotient, polar_mult, euler_obstruction;
  std::optional<BasicPolarResult<K>> polar;
  std::vector<BasicColengthWitness<K>> witnesses;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> warnings;

  bool isolated() const { return mu.is_finite(); }
};
using HypersurfaceData = BasicHypersurfaceData<Rational>;

namespace detail {

template <class F>
auto timed(std::map<std::string, double>& sink, const std::string& key, F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&] {
    sink[key] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  if constexpr (std::is_void_v<decltype(fn())>) {
    fn();
    finish();
  } else {
    auto r = fn();
    finish();
    return r;
  }
}

template <Field K>
Colength ideal_colength_witnessed(std::vector<BasicColengthWitness<K>>& sink, std::string label, std::size_t n,
                                  std::vector<BasicPolynomial<K>> gens) {
  auto c = BasicIdeal<K>(n, gens).colength();
  sink.push_back({std::move(label), 1, as_vectors(gens), c});
  return c;
}

}  // namespace detail

template <Field K>
BasicHypersurfaceData<K> analyze_hypersurface(const BasicPolynomial<K>& phi, const PolarOptions& opts = {}) {
  detail::require_vanishing(phi, "analyze_hypersurface");
  const std::size_t n = phi.nvars();
  BasicHypersurfaceData<K> h;
  h.phi = phi;
  auto& w = h.witnesses;
  h.mu = detail::timed(h.timings_ms, "mu_X",
                       [&] { return detail::ideal_colength_witnessed(w, "mu_X", n, gradient(phi)); });
  h.tau = detail::timed(h.timings_ms, "tau_X", [&] {
    return detail::ideal_colength_witnessed(w, "tau_X", n, detail::with(gradient(phi), phi));
  });
  if (!h.isolated()) {
    h.warnings.push_back("phi does not have an isolated singularity; X-level invariants are undefined");
    return h;
  }
  h.theta = detail::timed(h.timings_ms, "theta_x", [&] { return theta_x(phi); });
  detail::timed(h.timings_ms, "theta_quotient", [&] {
    auto q = quotient_with_preimage(n, n, h.theta, trivial_generators(phi));
    h.theta_quotient = ReportValue::from(q.dim);
    w.push_back({"theta_quotient", h.theta.size(), std::move(q.preimage), q.dim});
  });
  detail::timed(h.timings_ms, "polar_mult", [&] {
    try {
      h.polar = polar_multiplicity(phi, opts);
    } catch (const PreconditionError& e) {
      h.warnings.push_back(e.what());
      return;
    }
    for (const auto& s : h.polar->warnings) h.warnings.push_back(s);
    h.polar_mult = ReportValue::from(h.polar->value);
    h.euler_obstruction =
        ReportValue::finite(h.polar->value.as_signed() - h.mu.as_signed() + detail::sign_power(n));
    w.push_back({"polar_mult", 1, as_vectors(detail::with(detail::jacobian_minors(h.polar->p, phi), phi)),
                 h.polar->value});
  });
  return h;
}

template <Field K>
struct BasicInvariantReport {
  ReportValue mu_f, mu_X, tau_X, mu_icis;
  ReportValue br_direct, br_trivial, br_formula, br_section;
  ReportValue theta_quotient, polar_mult, euler_obstruction, morsification_N;
  bool finitely_determined = false;
  bool routes_agree = false;
  bool weighted_homogeneous_hint = false;
  std::optional<BasicPolynomial<K>> polar_p;
  std::vector<std::string> warnings;
  std::vector<std::string> inconsistencies;
  std::map<std::string, double> timings_ms;
  std::vector<BasicColengthWitness<K>> witnesses;
};
using InvariantReport = BasicInvariantReport<Rational>;
using ColengthWitness = BasicColengthWitness<Rational>;

/// Report entry by its serialized key ("mu_f", "br_direct", "N", ...).
template <Field K>
ReportValue report_value(const BasicInvariantReport<K>& r, const std::string& key) {
  if (key == "mu_f") return r.mu_f;
  if (key == "mu_X") return r.mu_X;
  if (key == "tau_X") return r.tau_X;
  if (key == "mu_icis") return r.mu_icis;
  if (key == "br_direct") return r.br_direct;
  if (key == "br_trivial") return r.br_trivial;
  if (key == "br_formula") return r.br_formula;
  if (key == "br_section") return r.br_section;
  if (key == "theta_quotient") return r.theta_quotient;
  if (key == "polar_mult") return r.polar_mult;
  if (key == "euler_obstruction") return r.euler_obstruction;
  if (key == "N") return r.morsification_N;
  throw std::invalid_argument("unknown report key '" + key + "'");
}

/// Every invariant of (f, X) with all four Bruce-Roberts routes. Never throws
/// on mathematical preconditions: failures show up as UNDEFINED entries.
template <Field K>
BasicInvariantReport<K> full_report(const BasicGermPair<K>& g, const BasicHypersurfaceData<K>& h) {
  if (!(h.phi == g.phi)) throw std::invalid_argument("full_report: hypersurface data belongs to another germ");
  const std::size_t n = g.nvars();
  BasicInvariantReport<K> r;
  r.timings_ms = h.timings_ms;
  r.witnesses = h.witnesses;
  r.warnings = h.warnings;
  auto& w = r.witnesses;
  auto& t = r.timings_ms;

  r.mu_X = ReportValue::from(h.mu);
  r.tau_X = ReportValue::from(h.tau);
  r.theta_quotient = h.theta_quotient;
  r.polar_mult = h.polar_mult;
  r.euler_obstruction = h.euler_obstruction;
  if (h.polar) r.polar_p = h.polar->p;
  r.weighted_homogeneous_hint = h.isolated() && h.mu == h.tau;

  auto mu_f = detail::timed(t, "mu_f", [&] { return detail::ideal_colength_witnessed(w, "mu_f", n, gradient(g.f)); });
  r.mu_f = ReportValue::from(mu_f);

  auto minors = detail::jacobian_minors(g.f, g.phi);
  auto icis = detail::timed(t, "mu_icis", [&] {
    return detail::ideal_colength_witnessed(w, "icis", n, detail::with(minors, g.phi));
  });
  if (h.isolated() && icis.is_finite()) r.mu_icis = ReportValue::finite(icis.as_signed() - h.mu.as_signed());

  auto trivial = detail::timed(t, "br_trivial", [&] {
    return detail::ideal_colength_witnessed(w, "br_trivial", n, df_trivial_ideal(g.f, g.phi).generators());
  });
  r.finitely_determined = trivial.is_finite();

  if (h.isolated()) {
    auto direct = detail::timed(t, "br_direct", [&] {
      return detail::ideal_colength_witnessed(w, "br_direct", n, df_ideal(g.f, h.theta).generators());
    });
    r.br_direct = ReportValue::from(direct);
    if (trivial.is_finite()) r.br_trivial = ReportValue::finite(trivial.as_signed() - h.tau.as_signed());
    if (mu_f.is_finite() && r.mu_icis.is_finite())
      r.br_formula = ReportValue::finite(mu_f.as_signed() + r.mu_icis.value() + h.mu.as_signed() - h.tau.as_signed());
    auto section = detail::timed(t, "br_section", [&] {
      return detail::ideal_colength_witnessed(w, "br_section", n, detail::with(minors, g.f));
    });
    if (section.is_finite())
      r.br_section = ReportValue::finite(section.as_signed() + h.mu.as_signed() - h.tau.as_signed());
  }

  if (r.finitely_determined && r.br_direct.is_finite() && mu_f.is_finite() && r.polar_mult.is_finite()) {
    long long N = r.br_direct.value() - mu_f.as_signed() - r.polar_mult.value() + h.tau.as_signed();
    r.morsification_N = ReportValue::finite(N);
    if (N < 0) r.inconsistencies.push_back("morsification count N = " + std::to_string(N) + " is negative");
  }

  const std::vector<ReportValue> routes{r.br_direct, r.br_trivial, r.br_formula, r.br_section};
  bool all_finite = std::all_of(routes.begin(), routes.end(), [](const ReportValue& v) { return v.is_finite(); });
  bool equal = all_finite && std::all_of(routes.begin(), routes.end(), [&](const ReportValue& v) { return v == routes[0]; });
  r.routes_agree = equal && r.theta_quotient == r.tau_X;

  if (r.finitely_determined && !equal)
    r.inconsistencies.push_back("Bruce-Roberts routes disagree: direct " + r.br_direct.str() + ", trivial " +
                                r.br_trivial.str() + ", formula " + r.br_formula.str() + ", section " +
                                r.br_section.str());
  if (h.isolated() && !(r.theta_quotient == r.tau_X))
    r.inconsistencies.push_back("theta quotient " + r.theta_quotient.str() + " differs from tau " + r.tau_X.str());
  if (!r.finitely_determined && r.br_direct.is_finite())
    r.inconsistencies.push_back("br_direct finite although df(Theta_X^T) has infinite colength");
  return r;
}

template <Field K>
BasicInvariantReport<K> full_report(const BasicGermPair<K>& g, const PolarOptions& opts = {}) {
  return full_report(g, analyze_hypersurface(g.phi, opts));
}

}  // namespace lsing
