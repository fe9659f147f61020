#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsing/poly_vector.hpp"

// Independent colength computation by exact dense-model linear algebra on
// jets. Nothing here touches the standard-basis engine: the two are meant to
// cross-check each other.

namespace lsing::oracle {

/// All monomials in `nvars` variables of total degree exactly `d`.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur.set(i, left);
      out.push_back(cur);
      cur.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(i, e);
      self(self, i + 1, left - e);
    }
    cur.set(i, 0);
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// Basis of O^r / m^{N+1}: (monomial, position) pairs with degree <= N,
/// indexed by increasing degree.
class JetSpace {
 public:
  JetSpace(std::size_t nvars, std::size_t rank, int max_degree) : n_(nvars), r_(rank), N_(max_degree) {
    index_.resize(rank);
    for (int d = 0; d <= max_degree; ++d) {
      degree_start_.push_back(basis_.size());
      for (const auto& m : monomials_of_degree(nvars, d))
        for (std::size_t p = 0; p < rank; ++p) {
          index_[p].emplace(m, basis_.size());
          basis_.push_back({m, p});
        }
    }
    degree_start_.push_back(basis_.size());
  }

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return r_; }
  int max_degree() const { return N_; }
  std::size_t size() const { return basis_.size(); }
  const ModuleTerm& at(std::size_t i) const { return basis_[i]; }
  std::size_t index(const Monomial& m, std::size_t pos) const { return index_[pos].at(m); }
  /// Number of basis elements with degree < d.
  std::size_t count_below(int d) const { return degree_start_[static_cast<std::size_t>(d)]; }

 private:
  std::size_t n_, r_;
  int N_;
  std::vector<ModuleTerm> basis_;
  std::vector<std::unordered_map<Monomial, std::size_t>> index_;
  std::vector<std::size_t> degree_start_;
};

/// Degree N with m^N contained in I + m^{N+1}; by Nakayama m^N is then in I.
struct NakayamaCertificate {
  int degree = 0;
};

struct JetColength {
  std::uint64_t colength = 0;
  NakayamaCertificate certificate;
};

namespace detail {

template <Field K>
using SparseRow = std::vector<std::pair<std::size_t, K>>;

template <Field K>
SparseRow<K> axpy(const SparseRow<K>& a, const K& c, const SparseRow<K>& b) {
  SparseRow<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, c * b[j].second});
      ++j;
    } else {
      K s = a[i].second + c * b[j].second;
      if (!is_zero(s)) out.push_back({a[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Row echelon form keyed by pivot column; pivots are leftmost nonzeros and
/// normalized to 1. Column order is increasing degree.
template <Field K>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : pivots_(ncols) {}

  /// Reduces `row` to its remainder against the current pivots.
  SparseRow<K> reduce(SparseRow<K> row) const {
    while (!row.empty()) {
      const auto& p = pivots_[row.front().first];
      if (!p) break;
      K c = -row.front().second;
      row = axpy(row, c, *p);
    }
    return row;
  }

  bool in_span(SparseRow<K> row) const { return reduce(std::move(row)).empty(); }

  void insert(SparseRow<K> row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    K inv = K(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    std::size_t c = row.front().first;
    pivots_[c] = std::move(row);
    ++rank_;
  }

  std::size_t rank() const { return rank_; }
  bool has_pivot(std::size_t col) const { return pivots_[col].has_value(); }

 private:
  std::vector<std::optional<SparseRow<K>>> pivots_;
  std::size_t rank_ = 0;
};

template <Field K>
SparseRow<K> to_row(const JetSpace& space, const BasicPolyVector<K>& v, const Monomial& shift) {
  SparseRow<K> row;
  for (std::size_t p = 0; p < v.rank(); ++p)
    for (const auto& t : v[p].terms()) {
      Monomial m = t.mono * shift;
      if (m.degree() > space.max_degree()) continue;
      row.push_back({space.index(m, p), t.coeff});
    }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

/// Echelon form of the span of x^a * g (truncated to degree <= N) over all
/// generators g and all |a| <= N - ord(g).
template <Field K>
Echelon<K> jet_span(const JetSpace& space, const std::vector<BasicPolyVector<K>>& gens) {
  Echelon<K> ech(space.size());
  const int N = space.max_degree();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int ord = g.order();
    for (int d = 0; d + ord <= N; ++d)
      for (const auto& shift : monomials_of_degree(space.nvars(), d)) ech.insert(to_row(space, g, shift));
  }
  return ech;
}

}  // namespace detail

/// Colength of the submodule generated by `gens` in O^rank, certified by
/// Nakayama. Returns nullopt (NO_CERTIFICATE) if no degree up to `cap`
/// certifies; that means infinite colength or a cap that is too small.
template <Field K>
std::optional<JetColength> jet_module_colength(const std::vector<BasicPolyVector<K>>& gens, std::size_t nvars,
                                               std::size_t rank, int cap = 40) {
  if (cap < 1) throw std::invalid_argument("jet oracle: cap must be >= 1");
  for (const auto& g : gens)
    if (g.rank() != rank || g.nvars() != nvars) throw DimensionMismatch("jet oracle: generator rank mismatch");
  for (int N = 1; N <= cap; ++N) {
    JetSpace space(nvars, rank, N);
    auto ech = detail::jet_span(space, gens);
    std::size_t below = space.count_below(N);
    std::size_t top_pivots = 0;
    for (std::size_t c = below; c < space.size(); ++c) top_pivots += ech.has_pivot(c);
    if (top_pivots != space.size() - below) continue;
    std::size_t low_rank = ech.rank() - top_pivots;
    return JetColength{below - low_rank, {N}};
  }
  return std::nullopt;
}

template <Field K>
std::optional<JetColength> jet_colength(const std::vector<BasicPolynomial<K>>& gens, std::size_t nvars,
                                        int cap = 40) {
  return jet_module_colength(as_vectors(gens), nvars, 1, cap);
}

/// Re-checks a certificate from scratch: every degree-N basis element must
/// lie in the span of the truncated generator multiples.
template <Field K>
bool replay_certificate(const std::vector<BasicPolyVector<K>>& gens, std::size_t nvars, std::size_t rank,
                        const NakayamaCertificate& cert) {
  JetSpace space(nvars, rank, cert.degree);
  auto ech = detail::jet_span(space, gens);
  for (std::size_t c = space.count_below(cert.degree); c < space.size(); ++c) {
    detail::SparseRow<K> unit{{c, K(1)}};
    if (!ech.in_span(std::move(unit))) return false;
  }
  return true;
}

template <Field K>
bool replay_certificate(const std::vector<BasicPolynomial<K>>& gens, std::size_t nvars,
                        const NakayamaCertificate& cert) {
  return replay_certificate(as_vectors(gens), nvars, 1, cert);
}

}  // namespace lsing::oracle
