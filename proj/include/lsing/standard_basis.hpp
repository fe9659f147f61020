#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "lsing/errors.hpp"
#include "lsing/poly_vector.hpp"

namespace lsing {

/// dim_C of a quotient: a non-negative integer or INFINITE.
class Colength {
 public:
  constexpr Colength() = default;
  static constexpr Colength finite(std::uint64_t v) { return Colength(v, true); }
  static constexpr Colength infinite() { return Colength(0, false); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }
  std::uint64_t value() const {
    if (!finite_) throw std::domain_error("value() of infinite colength");
    return value_;
  }
  long long as_signed() const { return static_cast<long long>(value()); }

  friend constexpr bool operator==(const Colength&, const Colength&) = default;

  std::string str() const { return finite_ ? std::to_string(value_) : "INFINITE"; }
  friend std::ostream& operator<<(std::ostream& os, const Colength& c) { return os << c.str(); }

 private:
  constexpr Colength(std::uint64_t v, bool fin) : value_(v), finite_(fin) {}
  std::uint64_t value_ = 0;
  bool finite_ = true;
};

namespace detail {

template <Field K>
struct Element {
  BasicPolyVector<K> vec;
  ModuleTerm lead;
  K lc;
  int ecart = 0;

  static Element make(BasicPolyVector<K> v, const ModuleOrder& ord) {
    auto lt = v.leading(ord);
    Element e{std::move(v), lt->first, lt->second, 0};
    e.ecart = e.vec.degree() - e.lead.mono.degree();
    return e;
  }
};

/// Reducer with minimal ecart among elements whose leading term divides lt.
/// Returns an index into base followed by extra, or -1.
template <Field K>
std::ptrdiff_t find_reducer(const ModuleTerm& lt, const std::vector<Element<K>>& base,
                            const std::vector<Element<K>>& extra) {
  std::ptrdiff_t best = -1;
  int best_ecart = 0;
  auto consider = [&](const Element<K>& g, std::ptrdiff_t idx) {
    if (g.lead.pos != lt.pos || !g.lead.mono.divides(lt.mono)) return;
    if (best < 0 || g.ecart < best_ecart) {
      best = idx;
      best_ecart = g.ecart;
    }
  };
  for (std::size_t i = 0; i < base.size(); ++i) consider(base[i], static_cast<std::ptrdiff_t>(i));
  for (std::size_t i = 0; i < extra.size(); ++i) consider(extra[i], static_cast<std::ptrdiff_t>(base.size() + i));
  return best;
}

/// Smallest D such that every term x^a e_p with |a| >= D and p in
/// [first, rank) is divisible by one of `leads`; nullopt when some of those
/// positions has an infinite staircase.
inline std::optional<int> corner_degree(const std::vector<ModuleTerm>& leads, std::size_t nvars, std::size_t rank,
                                        std::size_t first = 0) {
  int corner = 0;
  for (std::size_t pos = first; pos < rank; ++pos) {
    std::vector<Monomial> here;
    for (const auto& t : leads)
      if (t.pos == pos) here.push_back(t.mono);
    if (std::any_of(here.begin(), here.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    if (nvars == 0) return std::nullopt;
    std::vector<int> bound(nvars, std::numeric_limits<int>::max());
    for (const auto& m : here) {
      int v = m.pure_power_variable();
      if (v >= 0) bound[v] = std::min(bound[v], m[v]);
    }
    for (int b : bound)
      if (b == std::numeric_limits<int>::max()) return std::nullopt;
    Monomial cur(nvars);
    while (true) {
      if (!std::any_of(here.begin(), here.end(), [&](const Monomial& m) { return m.divides(cur); }))
        corner = std::max(corner, cur.degree() + 1);
      std::size_t i = 0;
      for (; i < nvars; ++i) {
        if (cur[i] + 1 < bound[i]) {
          cur.set(i, cur[i] + 1);
          break;
        }
        cur.set(i, 0);
      }
      if (i == nvars) break;
    }
  }
  return corner;
}

template <Field K>
std::optional<int> corner_degree(const std::vector<Element<K>>& elems, std::size_t nvars, std::size_t rank,
                                 const ModuleOrder& ord) {
  // Elements led in the lower block have zero upper block, so they span a
  // submodule of the lower block alone; only there may terms be dropped.
  if (elems.empty() || ord.elim >= rank) return std::nullopt;
  std::vector<ModuleTerm> leads;
  for (const auto& e : elems) leads.push_back(e.lead);
  return corner_degree(leads, nvars, rank, ord.elim);
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(i, e);
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace detail

/// Mora's weak normal form of h with respect to the elements `basis`.
/// The returned r satisfies u*h = sum a_i g_i + r for a unit u, and either
/// r = 0 or its leading term is divisible by no leading term of `basis`.
/// Intermediate remainders with small ecart join the reducer set, which is
/// what makes the loop terminate under a local order.
///
/// When `corner` is set, every term of that degree or higher in a position
/// outside the elimination block lies in the module, so such terms are
/// dropped from h; `upper_corner` does the same inside the block.
template <Field K>
BasicPolyVector<K> weak_normal_form(BasicPolyVector<K> h, const std::vector<detail::Element<K>>& basis,
                                    const ModuleOrder& ord, std::optional<int> corner = std::nullopt,
                                    std::optional<int> upper_corner = std::nullopt) {
  std::vector<detail::Element<K>> extra;
  while (true) {
    if (corner) h.truncate_below(*corner, ord.elim);
    if (upper_corner) h.truncate_below(*upper_corner, 0, ord.elim);
    auto lt = h.leading(ord);
    if (!lt) return h;
    auto idx = detail::find_reducer(lt->first, basis, extra);
    if (idx < 0) return h;
    auto at = static_cast<std::size_t>(idx);
    int ecart_h = h.degree() - lt->first.mono.degree();
    int ecart_g = at < basis.size() ? basis[at].ecart : extra[at - basis.size()].ecart;
    if (ecart_g > ecart_h) extra.push_back(detail::Element<K>{h, lt->first, lt->second, ecart_h});
    const auto* g = at < basis.size() ? &basis[at] : &extra[at - basis.size()];
    K factor = -(lt->second / g->lc);
    Monomial shift = lt->first.mono / g->lead.mono;
    h.add_scaled(factor, shift, g->vec);
  }
}

struct StandardBasisOptions {
  bool product_criterion = true;
  bool chain_criterion = true;
  /// Degree from which every term in the elimination block is known to lie
  /// in the module.
  std::optional<int> upper_corner;
};

/// Mora's tangent cone algorithm over O^r. Pairs are processed by increasing
/// sugar-like key (lcm degree plus larger ecart), then first-in-first-out. The
/// result is interreduced so no leading term divides another.
template <Field K>
std::vector<detail::Element<K>> standard_basis_elements(const std::vector<BasicPolyVector<K>>& gens,
                                                        const ModuleOrder& ord,
                                                        StandardBasisOptions opts = {}) {
  using Elem = detail::Element<K>;
  std::vector<Elem> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Elem e = Elem::make(g, ord);
    basis.push_back(Elem::make((K(1) / e.lc) * e.vec, ord));
  }
  if (basis.empty()) return basis;
  const bool ideal = basis.front().vec.rank() == 1;
  const std::size_t nvars = basis.front().vec.nvars(), rank = basis.front().vec.rank();
  auto corner = detail::corner_degree(basis, nvars, rank, ord);

  struct Pair {
    int key;
    std::uint64_t seq;
    std::size_t i, j;
    Monomial lcm;
    bool operator<(const Pair& o) const { return key != o.key ? key < o.key : seq < o.seq; }
  };
  std::set<Pair> queue;
  std::uint64_t seq = 0;

  auto add_pairs_for = [&](std::size_t t) {
    const Elem& et = basis[t];
    // Chain criterion: drop queued (i,j) whose lcm is a multiple of lead(t),
    // unless lcm(i,t) or lcm(j,t) coincides with it.
    if (opts.chain_criterion) {
      for (auto it = queue.begin(); it != queue.end();) {
        const Elem& ei = basis[it->i];
        if (ei.lead.pos == et.lead.pos && et.lead.mono.divides(it->lcm) &&
            !(lcm(ei.lead.mono, et.lead.mono) == it->lcm) &&
            !(lcm(basis[it->j].lead.mono, et.lead.mono) == it->lcm))
          it = queue.erase(it);
        else
          ++it;
      }
    }
    for (std::size_t s = 0; s < t; ++s) {
      const Elem& es = basis[s];
      if (es.lead.pos != et.lead.pos) continue;
      if (opts.product_criterion && ideal && coprime(es.lead.mono, et.lead.mono)) continue;
      Monomial l = lcm(es.lead.mono, et.lead.mono);
      int key = l.degree() + std::max(es.ecart, et.ecart);
      queue.insert(Pair{key, seq++, s, t, l});
    }
  };

  for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    const Elem& a = basis[p.i];
    const Elem& b = basis[p.j];
    BasicPolyVector<K> s(a.vec.nvars(), a.vec.rank());
    s.add_scaled(K(1) / a.lc, p.lcm / a.lead.mono, a.vec);
    s.add_scaled(-(K(1) / b.lc), p.lcm / b.lead.mono, b.vec);
    BasicPolyVector<K> h = weak_normal_form(std::move(s), basis, ord, corner, opts.upper_corner);
    if (h.is_zero()) continue;
    Elem e = Elem::make(std::move(h), ord);
    basis.push_back(Elem::make((K(1) / e.lc) * e.vec, ord));
    corner = detail::corner_degree(basis, nvars, rank, ord);
    add_pairs_for(basis.size() - 1);
  }

  // Keep only elements whose leading term is not a multiple of another's.
  std::vector<Elem> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].lead.pos != basis[i].lead.pos) continue;
      if (!basis[j].lead.mono.divides(basis[i].lead.mono)) continue;
      // Equal leading terms: keep the earlier one.
      redundant = !(basis[j].lead.mono == basis[i].lead.mono) || j < i;
    }
    if (!redundant) minimal.push_back(std::move(basis[i]));
  }
  return minimal;
}

/// Number of (monomial, position) pairs outside the leading-term module.
/// Infinite iff some position lacks a pure power of some variable.
inline Colength staircase_colength(const std::vector<ModuleTerm>& leads, std::size_t nvars, std::size_t rank) {
  std::uint64_t total = 0;
  for (std::size_t pos = 0; pos < rank; ++pos) {
    std::vector<Monomial> here;
    for (const auto& t : leads)
      if (t.pos == pos) here.push_back(t.mono);
    if (std::any_of(here.begin(), here.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    std::vector<int> bound(nvars, std::numeric_limits<int>::max());
    for (const auto& m : here) {
      int v = m.pure_power_variable();
      if (v >= 0) bound[v] = std::min(bound[v], m[v]);
    }
    for (int b : bound)
      if (b == std::numeric_limits<int>::max()) return Colength::infinite();
    if (nvars == 0) {
      ++total;
      continue;
    }
    Monomial cur(nvars);
    while (true) {
      bool in = std::any_of(here.begin(), here.end(), [&](const Monomial& m) { return m.divides(cur); });
      if (!in) ++total;
      std::size_t i = 0;
      for (; i < nvars; ++i) {
        if (cur[i] + 1 < bound[i]) {
          cur.set(i, cur[i] + 1);
          break;
        }
        cur.set(i, 0);
      }
      if (i == nvars) break;
    }
  }
  return Colength::finite(total);
}

template <Field K>
std::vector<ModuleTerm> leading_terms(const std::vector<detail::Element<K>>& sb) {
  std::vector<ModuleTerm> out;
  for (const auto& e : sb) out.push_back(e.lead);
  return out;
}

// ---------------------------------------------------------------------------
// Ideals

/// Generators of an ideal of O_n with a lazily computed standard basis.
template <Field K>
class BasicIdeal {
 public:
  using poly_type = BasicPolynomial<K>;

  explicit BasicIdeal(std::size_t nvars, std::vector<poly_type> gens = {}) : n_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.nvars() != n_) throw DimensionMismatch("ideal generator over wrong ring");
  }

  std::size_t nvars() const { return n_; }
  const std::vector<poly_type>& generators() const { return gens_; }

  const std::vector<detail::Element<K>>& sb_elements() const {
    if (!sb_) sb_ = standard_basis_elements(as_vectors(gens_), ModuleOrder{});
    return *sb_;
  }

  std::vector<poly_type> standard_basis() const {
    std::vector<poly_type> out;
    for (const auto& e : sb_elements()) out.push_back(e.vec[0]);
    return out;
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : sb_elements()) out.push_back(e.lead.mono);
    return out;
  }

  Colength colength() const { return staircase_colength(leading_terms(sb_elements()), n_, 1); }

  bool contains(const poly_type& f) const {
    if (f.nvars() != n_) throw DimensionMismatch("membership over wrong ring");
    if (f.is_zero()) return true;
    return weak_normal_form(BasicPolyVector<K>(std::vector<poly_type>{f}), sb_elements(), ModuleOrder{},
                            detail::corner_degree(sb_elements(), n_, 1, ModuleOrder{}))
        .is_zero();
  }

  BasicIdeal operator+(const BasicIdeal& other) const {
    if (other.n_ != n_) throw DimensionMismatch("ideal sum over different rings");
    std::vector<poly_type> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return BasicIdeal(n_, std::move(g));
  }

 private:
  std::size_t n_;
  std::vector<poly_type> gens_;
  mutable std::optional<std::vector<detail::Element<K>>> sb_;
};

using Ideal = BasicIdeal<Rational>;

/// Weak normal form of f against the list G (G need not be a standard basis).
template <Field K>
BasicPolynomial<K> mora_reduce(const BasicPolynomial<K>& f, const std::vector<BasicPolynomial<K>>& G) {
  for (const auto& g : G)
    if (g.nvars() != f.nvars()) throw DimensionMismatch("mora_reduce: variable count mismatch");
  std::vector<detail::Element<K>> basis;
  for (const auto& g : G)
    if (!g.is_zero()) basis.push_back(detail::Element<K>::make(BasicPolyVector<K>(std::vector{g}), ModuleOrder{}));
  if (f.is_zero()) return f;
  return weak_normal_form(BasicPolyVector<K>(std::vector{f}), basis, ModuleOrder{})[0];
}

template <Field K>
std::vector<BasicPolynomial<K>> standard_basis(const BasicIdeal<K>& I) {
  return I.standard_basis();
}

template <Field K>
Colength colength(const BasicIdeal<K>& I) {
  return I.colength();
}

template <Field K>
bool ideal_membership(const BasicPolynomial<K>& f, const BasicIdeal<K>& I) {
  return I.contains(f);
}

// ---------------------------------------------------------------------------
// Submodules of O^r

template <Field K>
class BasicSubmodule {
 public:
  using vec_type = BasicPolyVector<K>;

  BasicSubmodule(std::size_t nvars, std::size_t rank, std::vector<vec_type> gens = {})
      : n_(nvars), r_(rank), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.rank() != r_ || g.nvars() != n_) throw DimensionMismatch("submodule generator has wrong rank");
  }

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return r_; }
  const std::vector<vec_type>& generators() const { return gens_; }

  const std::vector<detail::Element<K>>& sb_elements() const {
    if (!sb_) sb_ = standard_basis_elements(gens_, ModuleOrder{});
    return *sb_;
  }

  Colength colength() const { return staircase_colength(leading_terms(sb_elements()), n_, r_); }

  bool contains(const vec_type& v) const {
    if (v.rank() != r_) throw DimensionMismatch("membership: rank mismatch");
    if (v.is_zero()) return true;
    return weak_normal_form(v, sb_elements(), ModuleOrder{}, detail::corner_degree(sb_elements(), n_, r_, ModuleOrder{}))
        .is_zero();
  }

 private:
  std::size_t n_, r_;
  std::vector<vec_type> gens_;
  mutable std::optional<std::vector<detail::Element<K>>> sb_;
};

using Submodule = BasicSubmodule<Rational>;

template <Field K>
Colength module_colength(const BasicSubmodule<K>& M) {
  return M.colength();
}

/// Standard basis (term-over-position order on O^k) of the preimage
///   P = { h in O^k : sum h_i n_i in <D> }.
/// Built from the tagged generators (n_i ; e_i) and (d_j ; 0) in O^{r+k} under
/// an order eliminating the first r positions; the basis elements whose
/// leading term lies in the tag block are exactly a standard basis of P.
/// With D empty this is a standard basis of the syzygy module of N.
template <Field K>
std::vector<BasicPolyVector<K>> preimage_standard_basis(std::size_t nvars, std::size_t rank,
                                                        const std::vector<BasicPolyVector<K>>& N,
                                                        const std::vector<BasicPolyVector<K>>& D) {
  const std::size_t k = N.size();
  std::vector<BasicPolyVector<K>> tagged;
  for (std::size_t i = 0; i < k; ++i) {
    if (N[i].rank() != rank) throw DimensionMismatch("preimage: rank mismatch");
    tagged.push_back(N[i].concat(BasicPolyVector<K>::unit(nvars, k, i)));
  }
  for (const auto& d : D) {
    if (d.rank() != rank) throw DimensionMismatch("preimage: rank mismatch");
    tagged.push_back(d.concat(BasicPolyVector<K>(nvars, k)));
  }
  if (k == 0) return {};
  // If m^c O^r lies in <D>, the untagged (x^a e_p ; 0) with |a| = c belong to
  // the tagged module. Adding them lets high-degree value terms be dropped.
  StandardBasisOptions opts;
  if (!D.empty()) {
    auto dsb = standard_basis_elements(D, ModuleOrder{});
    opts.upper_corner = detail::corner_degree(dsb, nvars, rank, ModuleOrder{});
    if (opts.upper_corner) {
      const int c = *opts.upper_corner;
      for (const auto& m : detail::monomials_of_degree(nvars, c))
        for (std::size_t p = 0; p < rank; ++p) {
          BasicPolyVector<K> v(nvars, rank + k);
          v[p] = BasicPolynomial<K>::monomial(m, K(1));
          tagged.push_back(std::move(v));
        }
      // x^a n_i lies in m^c O^r, hence in <D>, once |a| + ord(n_i) >= c.
      for (std::size_t i = 0; i < k; ++i) {
        int d = N[i].is_zero() ? 0 : std::max(0, c - N[i].order());
        for (const auto& m : detail::monomials_of_degree(nvars, d)) {
          BasicPolyVector<K> v(nvars, rank + k);
          v[rank + i] = BasicPolynomial<K>::monomial(m, K(1));
          tagged.push_back(std::move(v));
        }
      }
    }
  }
  auto sb = standard_basis_elements(tagged, ModuleOrder{rank}, opts);
  std::vector<BasicPolyVector<K>> out;
  for (const auto& e : sb) {
    if (e.lead.pos < rank) continue;
    out.push_back(e.vec.slice(rank, k));
  }
  return out;
}

/// Generators of { h in O^k : sum h_i g_i = 0 }. Every returned vector is an
/// exact polynomial identity, not just a local one.
template <Field K>
std::vector<BasicPolyVector<K>> syzygies(const std::vector<BasicPolynomial<K>>& g) {
  if (g.empty()) throw std::invalid_argument("syzygies: empty list");
  return preimage_standard_basis(g.front().nvars(), 1, as_vectors(g), {});
}

template <Field K>
std::vector<BasicPolyVector<K>> module_syzygies(std::size_t nvars, std::size_t rank,
                                                const std::vector<BasicPolyVector<K>>& g) {
  return preimage_standard_basis(nvars, rank, g, {});
}

/// Result of expressing f through generators: unit * f = sum cofactors_i g_i.
template <Field K>
struct LiftResult {
  BasicPolynomial<K> unit;
  std::vector<BasicPolynomial<K>> cofactors;
};

/// Local division with cofactor bookkeeping; nullopt when f is not in <G>
/// in the local ring. The identity holds exactly as polynomials.
template <Field K>
std::optional<LiftResult<K>> lift(const BasicPolynomial<K>& f, const std::vector<BasicPolynomial<K>>& G) {
  const std::size_t n = f.nvars();
  const std::size_t k = G.size();
  // Positions: [0] value, [1, 1+k) tags, [1+k] multiplier of f.
  std::vector<BasicPolyVector<K>> tagged;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BasicPolynomial<K>> c(k + 2, BasicPolynomial<K>(n));
    c[0] = G[i];
    c[1 + i] = BasicPolynomial<K>::constant(n, K(1));
    tagged.emplace_back(std::move(c));
  }
  ModuleOrder ord{1};
  auto sb = standard_basis_elements(tagged, ord);
  std::vector<BasicPolynomial<K>> c(k + 2, BasicPolynomial<K>(n));
  c[0] = f;
  c[k + 1] = BasicPolynomial<K>::constant(n, K(1));
  auto r = weak_normal_form(BasicPolyVector<K>(std::move(c)), sb, ord);
  if (!r[0].is_zero()) return std::nullopt;
  LiftResult<K> out{r[k + 1], {}};
  for (std::size_t i = 0; i < k; ++i) out.cofactors.push_back(-r[1 + i]);
  return out;
}

template <Field K>
struct QuotientResult {
  Colength dim;
  /// Standard basis of the preimage of <D> in O^k; dim is its colength.
  std::vector<BasicPolyVector<K>> preimage;
};

/// dim_C <N>/<D> for D contained in N, via the colength of the preimage of D
/// under O^k -> <N>. Throws ContainmentError if D is not inside N.
template <Field K>
QuotientResult<K> quotient_with_preimage(std::size_t nvars, std::size_t rank, const std::vector<BasicPolyVector<K>>& N,
                                         const std::vector<BasicPolyVector<K>>& D) {
  BasicSubmodule<K> big(nvars, rank, N);
  for (const auto& d : D)
    if (!big.contains(d)) throw ContainmentError("quotient_dimension: D is not contained in N");
  if (N.empty()) return {Colength::finite(0), {}};
  auto P = preimage_standard_basis(nvars, rank, N, D);
  std::vector<ModuleTerm> leads;
  for (const auto& v : P) leads.push_back(v.leading(ModuleOrder{})->first);
  return {staircase_colength(leads, nvars, N.size()), std::move(P)};
}

template <Field K>
Colength quotient_dimension(std::size_t nvars, std::size_t rank, const std::vector<BasicPolyVector<K>>& N,
                            const std::vector<BasicPolyVector<K>>& D) {
  return quotient_with_preimage(nvars, rank, N, D).dim;
}

template <Field K>
Colength quotient_dimension(const std::vector<BasicPolynomial<K>>& N, const std::vector<BasicPolynomial<K>>& D) {
  std::size_t n = !N.empty() ? N.front().nvars() : (!D.empty() ? D.front().nvars() : 0);
  return quotient_dimension(n, 1, as_vectors(N), as_vectors(D));
}

}  // namespace lsing
