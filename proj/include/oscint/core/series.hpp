#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oscint/core/big_rational.hpp"
#include "oscint/core/field.hpp"
#include "oscint/core/poly.hpp"

namespace oscint {

/// Truncated power series Σ_{k≤T} c_k t^k with an explicit truncation order T.
///
/// Coefficients beyond T are unknown rather than zero; every operation
/// returns the order up to which its result is still exact. An order of -1
/// denotes a series about which nothing is known.
template <Field C>
class PowerSeries {
 public:
  using Traits = FieldTraits<C>;

  PowerSeries() = default;

  PowerSeries(std::vector<C> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
    if (order < -1) throw std::invalid_argument("truncation order below -1");
    c_.resize(static_cast<std::size_t>(order + 1), Traits::zero());
  }

  static PowerSeries from_poly(const Poly<C>& p, int order) {
    std::vector<C> coeffs(p.coeffs().begin(), p.coeffs().end());
    if (coeffs.size() > static_cast<std::size_t>(order + 1)) coeffs.resize(static_cast<std::size_t>(order + 1));
    return PowerSeries(std::move(coeffs), order);
  }

  /// The series t (identity map) to the given order.
  static PowerSeries variable(int order) {
    std::vector<C> coeffs(static_cast<std::size_t>(std::max(order + 1, 0)), Traits::zero());
    if (order >= 1) coeffs[1] = Traits::one();
    return PowerSeries(std::move(coeffs), order);
  }

  int order() const { return order_; }
  std::span<const C> coeffs() const { return c_; }

  const C& operator[](int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient beyond truncation order");
    return c_[static_cast<std::size_t>(k)];
  }

  PowerSeries truncated(int order) const {
    const int t = std::min(order, order_);
    return PowerSeries(std::vector<C>(c_.begin(), c_.begin() + (t + 1)), t);
  }

  Poly<C> to_poly() const { return Poly<C>(c_); }

  PowerSeries derivative() const {
    if (order_ <= 0) return PowerSeries({}, -1);
    std::vector<C> out;
    for (int k = 1; k <= order_; ++k) out.push_back(c_[static_cast<std::size_t>(k)] * Traits::from_int(k));
    return PowerSeries(std::move(out), order_ - 1);
  }

  /// Antiderivative with zero constant term; gains one order.
  PowerSeries antiderivative() const {
    std::vector<C> out{Traits::zero()};
    for (int k = 0; k <= order_; ++k) out.push_back(c_[static_cast<std::size_t>(k)] / Traits::from_int(k + 1));
    return PowerSeries(std::move(out), order_ + 1);
  }

  /// outer ∘ inner, requiring inner to have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const {
    if (inner.order_ >= 0 && !Traits::is_zero(inner.c_[0])) {
      throw std::invalid_argument("inner series of a composition must have zero constant term");
    }
    const int t = std::min(order_, inner.order_);
    if (t < 0) return PowerSeries({}, -1);
    PowerSeries acc({}, t);
    for (int k = order_; k >= 0; --k) {
      acc = acc * inner.truncated(t);
      acc.c_[0] = acc.c_[0] + c_[static_cast<std::size_t>(k)];
    }
    return acc.truncated(t);
  }

  PowerSeries& operator*=(const C& s) {
    for (C& v : c_) v = v * s;
    return *this;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.order_, b.order_);
    std::vector<C> out(static_cast<std::size_t>(t + 1), Traits::zero());
    for (int k = 0; k <= t; ++k) out[k] = a.c_[k] + b.c_[k];
    return PowerSeries(std::move(out), t);
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.order_, b.order_);
    std::vector<C> out(static_cast<std::size_t>(t + 1), Traits::zero());
    for (int k = 0; k <= t; ++k) out[k] = a.c_[k] - b.c_[k];
    return PowerSeries(std::move(out), t);
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int t = std::min(a.order_, b.order_);
    std::vector<C> out(static_cast<std::size_t>(t + 1), Traits::zero());
    for (int i = 0; i <= t; ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= t; ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return PowerSeries(std::move(out), t);
  }

  friend PowerSeries operator*(PowerSeries a, const C& s) { return a *= s; }
  friend PowerSeries operator*(const C& s, PowerSeries a) { return a *= s; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  int order_ = -1;
  std::vector<C> c_;
};

using RationalSeries = PowerSeries<BigRational>;

enum class VariableKind { power_of_x, power_of_inverse_x };

/// Complex-coefficient series in x or in X = 1/x.
///
/// In the inverse variable, index j multiplies x^{-j} and the constant
/// term must vanish.
class ComplexSeries {
 public:
  ComplexSeries() = default;
  ComplexSeries(PowerSeries<Complex> series, VariableKind kind) : series_(std::move(series)), kind_(kind) {
    if (kind_ == VariableKind::power_of_inverse_x && series_.order() >= 0 &&
        !FieldTraits<Complex>::is_zero(series_[0])) {
      throw std::invalid_argument("series in 1/x cannot carry a constant term");
    }
  }

  const PowerSeries<Complex>& series() const { return series_; }
  VariableKind kind() const { return kind_; }
  int order() const { return series_.order(); }
  const Complex& operator[](int k) const { return series_[k]; }

  /// Partial sum at x (the variable is 1/x for inverse series).
  Complex evaluate(double x) const {
    const double t = kind_ == VariableKind::power_of_x ? x : 1.0 / x;
    Complex acc{0.0, 0.0};
    const auto c = series_.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

 private:
  PowerSeries<Complex> series_;
  VariableKind kind_ = VariableKind::power_of_x;
};

}  // namespace oscint
