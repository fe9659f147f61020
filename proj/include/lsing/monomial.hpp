#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace lsing {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x^a over a fixed number of variables (at most kMaxVars).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }
  Monomial(std::size_t nvars, std::initializer_list<int> exps) : Monomial(nvars) {
    if (exps.size() != nvars) throw std::invalid_argument("exponent count mismatch");
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t nvars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](std::size_t i) const { return e_[i]; }

  void set(std::size_t i, int value) {
    if (value < 0) throw std::invalid_argument("negative exponent");
    deg_ += value - e_[i];
    e_[i] = static_cast<std::int16_t>(value);
  }

  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// Index of the variable if this is a pure power x_i^k (k >= 1), else -1.
  int pure_power_variable() const {
    int found = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::int16_t>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::int16_t>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u + static_cast<std::size_t>(e_[i]);
    return h;
  }

 private:
  std::array<std::int16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  int deg_ = 0;
};

/// Negative degree reverse-lexicographic order ("ds"): lower total degree is
/// larger, ties broken by reverse lex with x_1 > x_2 > ... > x_n. In this order
/// 1 > x_i for every i, which is what computations in the local ring need.
struct LocalOrder {
  static std::strong_ordering compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree() ? std::strong_ordering::greater : std::strong_ordering::less;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  static bool greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
};

}  // namespace lsing

template <>
struct std::hash<lsing::Monomial> {
  std::size_t operator()(const lsing::Monomial& m) const noexcept { return m.hash(); }
};
