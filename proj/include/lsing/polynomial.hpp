#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lsing/errors.hpp"
#include "lsing/field.hpp"
#include "lsing/monomial.hpp"

namespace lsing {

template <Field K>
struct Term {
  Monomial mono;
  K coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in
/// LocalOrder, no zero coefficients. The leading term (local order) is the
/// first one, which always has minimal total degree.
template <Field K>
class BasicPolynomial {
 public:
  using coeff_type = K;
  using term_type = Term<K>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : n_(nvars) {}

  static BasicPolynomial constant(std::size_t nvars, const K& c) {
    BasicPolynomial p(nvars);
    if (!lsing::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }
  static BasicPolynomial monomial(const Monomial& m, const K& c = K(1)) {
    BasicPolynomial p(m.nvars());
    if (!lsing::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static BasicPolynomial variable(std::size_t nvars, std::size_t i) {
    return monomial(Monomial::variable(nvars, i));
  }

  /// Canonicalizes an arbitrary term list (any order, duplicates, zeros).
  static BasicPolynomial from_terms(std::size_t nvars, std::vector<term_type> terms) {
    for (const auto& t : terms)
      if (t.mono.nvars() != nvars) throw DimensionMismatch("term has wrong variable count");
    BasicPolynomial p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const term_type& a, const term_type& b) { return LocalOrder::greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (lsing::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    }
    return p;
  }

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<term_type>& terms() const { return terms_; }

  const term_type& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const K& leading_coeff() const { return leading_term().coeff; }

  /// Largest total degree of a term.
  int degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Smallest total degree of a term (order of vanishing at 0).
  int order() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  int ecart() const { return degree() - leading_monomial().degree(); }

  K constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
    return K(0);
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    check_same(a, b);
    BasicPolynomial r(a.n_);
    r.terms_ = merge(a.terms_, b.terms_, K(1), Monomial(a.n_));
    return r;
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    check_same(a, b);
    BasicPolynomial r(a.n_);
    r.terms_ = merge(a.terms_, b.terms_, K(-1), Monomial(a.n_));
    return r;
  }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(a.n_);
    std::vector<term_type> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.n_, std::move(prod));
  }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  friend BasicPolynomial operator*(const K& c, const BasicPolynomial& p) {
    if (lsing::is_zero(c)) return BasicPolynomial(p.n_);
    BasicPolynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  BasicPolynomial times_monomial(const Monomial& m, const K& c) const {
    if (lsing::is_zero(c)) return BasicPolynomial(n_);
    BasicPolynomial r(n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// this += c * m * g, in place (single merge pass).
  void add_scaled(const K& c, const Monomial& m, const BasicPolynomial& g) {
    if (lsing::is_zero(c) || g.is_zero()) return;
    terms_ = merge(terms_, g.terms_, c, m);
  }

  /// Drops every term of total degree > max_degree.
  BasicPolynomial truncated(int max_degree) const {
    BasicPolynomial r(n_);
    for (const auto& t : terms_)
      if (t.mono.degree() <= max_degree) r.terms_.push_back(t);
    return r;
  }

  BasicPolynomial derivative(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("derivative: variable index out of range");
    std::vector<term_type> out;
    for (const auto& t : terms_) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      out.push_back({m, t.coeff * K(e)});
    }
    return from_terms(n_, std::move(out));
  }

  /// Scales so that the leading coefficient is 1.
  BasicPolynomial monic() const {
    if (is_zero()) return *this;
    return (K(1) / leading_coeff()) * *this;
  }

 private:
  static void check_same(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("polynomials over different variable counts");
  }

  // Returns a + c * m * b, both inputs sorted descending.
  static std::vector<term_type> merge(const std::vector<term_type>& a, const std::vector<term_type>& b,
                                      const K& c, const Monomial& m) {
    std::vector<term_type> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const bool shift = !m.is_one();
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial bm = shift ? b[j].mono * m : b[j].mono;
      if (i == a.size()) {
        out.push_back({bm, c * b[j++].coeff});
        continue;
      }
      auto cmp = LocalOrder::compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, c * b[j++].coeff});
      } else {
        K s = a[i++].coeff + c * b[j++].coeff;
        if (!lsing::is_zero(s)) out.push_back({bm, std::move(s)});
      }
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<term_type> terms_;
};

using Polynomial = BasicPolynomial<Rational>;

template <Field K>
BasicPolynomial<K> partial_derivative(const BasicPolynomial<K>& f, std::size_t i) {
  return f.derivative(i);
}

/// (df/dx_i)(dg/dx_j) - (df/dx_j)(dg/dx_i).
template <Field K>
BasicPolynomial<K> jacobian_minor(const BasicPolynomial<K>& f, const BasicPolynomial<K>& g, std::size_t i,
                                  std::size_t j) {
  if (i == j) throw std::invalid_argument("jacobian_minor: indices must differ");
  if (f.nvars() != g.nvars()) throw DimensionMismatch("jacobian_minor: variable count mismatch");
  return f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i);
}

template <Field K>
std::vector<BasicPolynomial<K>> gradient(const BasicPolynomial<K>& f) {
  std::vector<BasicPolynomial<K>> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

/// Renders as e.g. "y^2+x^3", "-3*x^2", "1/2*x*y". Terms in local order.
template <Field K>
std::string render(const BasicPolynomial<K>& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    K c = t.coeff;
    bool neg = is_negative(c);
    if (neg) c = -c;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || !is_one(c)) {
      out += to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out += "*";
      out += vars.at(i);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace lsing
