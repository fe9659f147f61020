#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "lsing/polynomial.hpp"

namespace lsing {

/// A module term x^a e_pos.
struct ModuleTerm {
  Monomial mono;
  std::size_t pos = 0;
};

/// Term-over-position order on O^r built on LocalOrder, optionally with an
/// elimination block: positions [0, elim) are larger than every position in
/// [elim, r) regardless of the monomial. Within a block, monomials compare
/// first, then the smaller position index is larger.
struct ModuleOrder {
  std::size_t elim = 0;

  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const {
    bool ba = a.pos < elim, bb = b.pos < elim;
    if (ba != bb) return ba ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = LocalOrder::compare(a.mono, b.mono); c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
};

/// Element of the free module O^r. Rank-1 vectors stand in for ideal elements.
template <Field K>
class BasicPolyVector {
 public:
  using poly_type = BasicPolynomial<K>;

  BasicPolyVector() = default;
  BasicPolyVector(std::size_t nvars, std::size_t rank) : n_(nvars), comps_(rank, poly_type(nvars)) {}
  explicit BasicPolyVector(std::vector<poly_type> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("PolyVector needs rank >= 1");
    n_ = comps_.front().nvars();
    for (const auto& c : comps_)
      if (c.nvars() != n_) throw DimensionMismatch("PolyVector components over different rings");
  }
  static BasicPolyVector unit(std::size_t nvars, std::size_t rank, std::size_t pos) {
    BasicPolyVector v(nvars, rank);
    v.comps_.at(pos) = poly_type::constant(nvars, K(1));
    return v;
  }

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return comps_.size(); }
  const poly_type& operator[](std::size_t i) const { return comps_[i]; }
  poly_type& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<poly_type>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const BasicPolyVector&, const BasicPolyVector&) = default;

  /// Leading module term and its coefficient; nullopt for the zero vector.
  std::optional<std::pair<ModuleTerm, K>> leading(const ModuleOrder& ord) const {
    std::optional<std::pair<ModuleTerm, K>> best;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (comps_[i].is_zero()) continue;
      ModuleTerm t{comps_[i].leading_monomial(), i};
      if (!best || ord.compare(t, best->first) > 0) best = {{t, comps_[i].leading_coeff()}};
    }
    return best;
  }

  int degree() const {
    int d = 0;
    for (const auto& c : comps_)
      if (!c.is_zero()) d = std::max(d, c.degree());
    return d;
  }

  /// Lowest total degree over all components (-1 for zero).
  int order() const {
    int d = -1;
    for (const auto& c : comps_)
      if (!c.is_zero() && (d < 0 || c.order() < d)) d = c.order();
    return d;
  }

  void add_scaled(const K& c, const Monomial& m, const BasicPolyVector& g) {
    check_rank(g);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i].add_scaled(c, m, g.comps_[i]);
  }

  /// Drops every term of total degree >= d in positions [first, last).
  void truncate_below(int d, std::size_t first = 0, std::size_t last = std::size_t(-1)) {
    for (std::size_t i = first; i < std::min(last, comps_.size()); ++i)
      if (!comps_[i].is_zero() && comps_[i].degree() >= d) comps_[i] = comps_[i].truncated(d - 1);
  }

  BasicPolyVector scaled(const poly_type& p) const {
    BasicPolyVector r = *this;
    for (auto& c : r.comps_) c = p * c;
    return r;
  }

  friend BasicPolyVector operator+(BasicPolyVector a, const BasicPolyVector& b) {
    a.check_rank(b);
    for (std::size_t i = 0; i < a.comps_.size(); ++i) a.comps_[i] += b.comps_[i];
    return a;
  }
  friend BasicPolyVector operator-(BasicPolyVector a, const BasicPolyVector& b) {
    a.check_rank(b);
    for (std::size_t i = 0; i < a.comps_.size(); ++i) a.comps_[i] -= b.comps_[i];
    return a;
  }
  friend BasicPolyVector operator*(const K& c, BasicPolyVector v) {
    for (auto& p : v.comps_) p = c * p;
    return v;
  }

  /// Components [from, from + count) as a new vector.
  BasicPolyVector slice(std::size_t from, std::size_t count) const {
    return BasicPolyVector(std::vector<poly_type>(comps_.begin() + from, comps_.begin() + from + count));
  }

  /// Concatenation (this ; tail).
  BasicPolyVector concat(const BasicPolyVector& tail) const {
    std::vector<poly_type> c = comps_;
    c.insert(c.end(), tail.comps_.begin(), tail.comps_.end());
    return BasicPolyVector(std::move(c));
  }

 private:
  void check_rank(const BasicPolyVector& g) const {
    if (g.rank() != rank() || g.n_ != n_) throw DimensionMismatch("PolyVector rank mismatch");
  }

  std::size_t n_ = 0;
  std::vector<poly_type> comps_;
};

using PolyVector = BasicPolyVector<Rational>;

/// Polynomials as rank-1 vectors.
template <Field K>
std::vector<BasicPolyVector<K>> as_vectors(const std::vector<BasicPolynomial<K>>& polys) {
  std::vector<BasicPolyVector<K>> out;
  for (const auto& p : polys) out.emplace_back(std::vector<BasicPolynomial<K>>{p});
  return out;
}

/// Sum of a_i * b_i.
template <Field K>
BasicPolynomial<K> dot(const BasicPolyVector<K>& a, const std::vector<BasicPolynomial<K>>& b) {
  if (a.rank() != b.size()) throw DimensionMismatch("dot: length mismatch");
  BasicPolynomial<K> s(a.nvars());
  for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Sum of h_i * v_i for module elements v_i.
template <Field K>
BasicPolyVector<K> combine(const BasicPolyVector<K>& h, const std::vector<BasicPolyVector<K>>& vs) {
  if (h.rank() != vs.size() || vs.empty()) throw DimensionMismatch("combine: length mismatch");
  BasicPolyVector<K> s(h.nvars(), vs.front().rank());
  for (std::size_t i = 0; i < vs.size(); ++i) s = s + vs[i].scaled(h[i]);
  return s;
}

}  // namespace lsing
