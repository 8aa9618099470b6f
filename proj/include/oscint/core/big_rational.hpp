#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "oscint/core/field.hpp"

namespace oscint {

/// Exact rational number over arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator. Text form is
/// "n" or "n/d"; parse() additionally accepts decimal literals such as
/// "-1.25" or "3e-4", which are converted exactly.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  BigRational(long numerator, long denominator);

  static BigRational from_mpq(mpq_class value);
  /// Exact binary value of a finite double.
  static BigRational from_double(double value);
  static BigRational parse(std::string_view text);

  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;
  double to_double() const;

  /// Decimal expansion rounded half-up to `significant` digits. Values
  /// below one are printed without the leading zero (".1481...").
  std::string to_decimal(int significant) const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  BigRational abs() const;
  BigRational inverse() const;
  BigRational pow(int exponent) const;

  const mpq_class& mpq() const { return value_; }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

template <>
struct FieldTraits<BigRational> {
  static BigRational zero() { return {}; }
  static BigRational one() { return {1}; }
  static BigRational from_int(long v) { return {v}; }
  static bool is_zero(const BigRational& v) { return v.is_zero(); }
  static double magnitude(const BigRational& v) { return std::abs(v.to_double()); }
};

/// Exact complex rational a + b·i.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(BigRational real, BigRational imag = {})  // NOLINT(google-explicit-constructor)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {BigRational{}, BigRational{1}}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  BigRational norm() const { return re * re + im * im; }
  Complex to_complex() const { return {re.to_double(), im.to_double()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

template <>
struct FieldTraits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational imag_unit() { return GaussianRational::i(); }
  static GaussianRational from_int(long v) { return {v}; }
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static double magnitude(const GaussianRational& v) { return std::abs(v.to_complex()); }
};

}  // namespace oscint
