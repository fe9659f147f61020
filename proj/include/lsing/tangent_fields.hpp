#pragma once

#include <cstddef>
#include <vector>

#include "lsing/errors.hpp"
#include "lsing/standard_basis.hpp"

namespace lsing {

/// xi_i is the coefficient of d/dx_i.
template <Field K>
using BasicVectorField = BasicPolyVector<K>;
using VectorField = BasicVectorField<Rational>;

/// dphi(xi) = sum xi_i dphi/dx_i.
template <Field K>
BasicPolynomial<K> apply_field(const BasicVectorField<K>& xi, const BasicPolynomial<K>& g) {
  if (xi.rank() != g.nvars() || xi.nvars() != g.nvars()) throw DimensionMismatch("vector field rank mismatch");
  return dot(xi, gradient(g));
}

/// phi d/dx_i for every i, then (dphi/dx_k) d/dx_j - (dphi/dx_j) d/dx_k for j < k.
template <Field K>
std::vector<BasicVectorField<K>> trivial_generators(const BasicPolynomial<K>& phi) {
  const std::size_t n = phi.nvars();
  std::vector<BasicVectorField<K>> out;
  for (std::size_t i = 0; i < n; ++i) {
    BasicVectorField<K> v(n, n);
    v[i] = phi;
    out.push_back(std::move(v));
  }
  auto grad = gradient(phi);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      BasicVectorField<K> v(n, n);
      v[j] = grad[k];
      v[k] = -grad[j];
      out.push_back(std::move(v));
    }
  return out;
}

/// Generators of the fields tangent to X = phi^-1(0): the projected syzygies
/// of (dphi/dx_1, ..., dphi/dx_n, phi), followed by the trivial generators.
template <Field K>
std::vector<BasicVectorField<K>> theta_x(const BasicPolynomial<K>& phi) {
  if (phi.is_zero()) throw PreconditionError("theta_x: phi is identically zero");
  const std::size_t n = phi.nvars();
  auto grad = gradient(phi);
  if (BasicIdeal<K>(n, grad).colength().is_infinite())
    throw PreconditionError("theta_x: phi does not have an isolated singularity");
  auto g = grad;
  g.push_back(phi);
  std::vector<BasicVectorField<K>> out;
  for (const auto& s : syzygies(g)) {
    auto v = s.slice(0, n);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  for (auto& t : trivial_generators(phi)) out.push_back(std::move(t));
  return out;
}

/// Ideal generated by xi(f) for xi in fields.
template <Field K>
BasicIdeal<K> df_ideal(const BasicPolynomial<K>& f, const std::vector<BasicVectorField<K>>& fields) {
  std::vector<BasicPolynomial<K>> gens;
  for (const auto& xi : fields) gens.push_back(apply_field(xi, f));
  return BasicIdeal<K>(f.nvars(), std::move(gens));
}

/// Closed form of df(Theta_X^T): <phi df/dx_i> + J(f, phi).
template <Field K>
BasicIdeal<K> df_trivial_ideal(const BasicPolynomial<K>& f, const BasicPolynomial<K>& phi) {
  if (f.nvars() != phi.nvars()) throw DimensionMismatch("df_trivial_ideal: variable count mismatch");
  const std::size_t n = f.nvars();
  std::vector<BasicPolynomial<K>> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(phi * partial_derivative(f, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(jacobian_minor(f, phi, i, j));
  return BasicIdeal<K>(n, std::move(gens));
}

/// For xi tangent to X with dphi(xi) = lambda phi: true iff lambda lies in the
/// Jacobian ideal of phi.
template <Field K>
bool is_trivial_field(const BasicVectorField<K>& xi, const BasicPolynomial<K>& phi) {
  auto d = apply_field(xi, phi);
  if (d.is_zero()) return true;
  if (phi.is_zero()) throw PreconditionError("is_trivial_field: phi is identically zero");
  // u * dphi(xi) = c * phi with u a unit, so lambda = c / u.
  auto l = lift(d, std::vector<BasicPolynomial<K>>{phi});
  if (!l) throw PreconditionError("is_trivial_field: field is not tangent to X");
  if (l->unit.constant_term() == K(0)) throw std::logic_error("is_trivial_field: division produced no unit");
  return BasicIdeal<K>(phi.nvars(), gradient(phi)).contains(l->cofactors[0]);
}

template <Field K>
struct BasicTangentModulePair {
  BasicPolynomial<K> phi;
  std::vector<BasicVectorField<K>> trivial_gens;
  std::vector<BasicVectorField<K>> full_gens;
};
using TangentModulePair = BasicTangentModulePair<Rational>;

template <Field K>
BasicTangentModulePair<K> tangent_module_pair(const BasicPolynomial<K>& phi) {
  return {phi, trivial_generators(phi), theta_x(phi)};
}

}  // namespace lsing
