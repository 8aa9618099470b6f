#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oscint/core/field.hpp"

namespace oscint {

/// Dense univariate polynomial; coefficient k multiplies x^k.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and no degree.
template <Field C>
class Poly {
 public:
  using Traits = FieldTraits<C>;
  using value_type = C;

  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(C value) { return Poly(std::vector<C>{std::move(value)}); }

  static Poly monomial(C value, std::size_t power) {
    std::vector<C> coeffs(power + 1, Traits::zero());
    coeffs[power] = std::move(value);
    return Poly(std::move(coeffs));
  }

  /// Highest power with a nonzero coefficient; empty for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  /// Lowest power with a nonzero coefficient; empty for the zero polynomial.
  std::optional<std::size_t> valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!Traits::is_zero(c_[k])) return k;
    }
    return std::nullopt;
  }

  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  std::span<const C> coeffs() const { return c_; }

  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }

  /// True when exactly one coefficient is nonzero.
  bool is_monomial() const {
    return !c_.empty() && valuation() == degree();
  }

  bool only_even_powers() const { return parity_check(1); }
  bool only_odd_powers() const { return parity_check(0); }

  template <class X>
  auto operator()(const X& x) const {
    using R = decltype(std::declval<C>() * std::declval<X>());
    R acc = R(Traits::zero());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> out;
    out.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Traits::from_int(static_cast<long>(k)));
    return Poly(std::move(out));
  }

  /// Antiderivative vanishing at the origin.
  Poly antiderivative() const {
    if (c_.empty()) return {};
    std::vector<C> out;
    out.reserve(c_.size() + 1);
    out.push_back(Traits::zero());
    for (std::size_t k = 0; k < c_.size(); ++k) out.push_back(c_[k] / Traits::from_int(static_cast<long>(k + 1)));
    return Poly(std::move(out));
  }

  /// Taylor shift: the polynomial t -> p(a + t).
  Poly shifted(const C& a) const {
    std::vector<C> out = c_;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t k = n - 1; k > i; --k) out[k - 1] = out[k - 1] + a * out[k];
    }
    return Poly(std::move(out));
  }

  /// Coefficient-wise conversion into another field.
  template <Field D, class F>
  Poly<D> map(F&& convert) const {
    std::vector<D> out;
    out.reserve(c_.size());
    for (const C& v : c_) out.push_back(convert(v));
    return Poly<D>(std::move(out));
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Traits::zero());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] = c_[k] + rhs.c_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Traits::zero());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] = c_[k] - rhs.c_[k];
    trim();
    return *this;
  }

  Poly& operator*=(const C& s) {
    for (C& v : c_) v = v * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }
  Poly operator-() const { return *this * (-Traits::one()); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  bool parity_check(std::size_t forbidden_parity) const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k % 2 == forbidden_parity && !Traits::is_zero(c_[k])) return false;
    }
    return true;
  }

  std::vector<C> c_;
};

/// Euclidean division: num = quotient * den + remainder, deg remainder < deg den.
template <Field C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& num, const Poly<C>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  using Traits = FieldTraits<C>;
  const std::size_t dd = *den.degree();
  if (num.is_zero() || *num.degree() < dd) return {Poly<C>{}, num};
  std::vector<C> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<C> quot(rem.size() - dd, Traits::zero());
  const C lead = den.coeff(dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const C factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - factor * den.coeff(j);
    rem[k] = Traits::zero();
  }
  rem.resize(dd);
  return {Poly<C>(std::move(quot)), Poly<C>(std::move(rem))};
}

/// Real polynomial with double coefficients: the amplitude p and phase φ.
using Polynomial = Poly<double>;

}  // namespace oscint
