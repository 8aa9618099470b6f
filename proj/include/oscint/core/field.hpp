#pragma once

#include <cmath>
#include <complex>
#include <concepts>

namespace oscint {

using Complex = std::complex<double>;

/// Per-type constants and predicates for the coefficient fields that
/// polynomials and series are instantiated over.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static bool is_zero(double v) { return v == 0.0; }
  static double magnitude(double v) { return std::abs(v); }
};

template <>
struct FieldTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static bool is_zero(const Complex& v) { return v.real() == 0.0 && v.imag() == 0.0; }
  static double magnitude(const Complex& v) { return std::abs(v); }
};

template <class T>
concept Field = requires(const T& a, const T& b) {
  { FieldTraits<T>::zero() } -> std::convertible_to<T>;
  { FieldTraits<T>::one() } -> std::convertible_to<T>;
  { FieldTraits<T>::from_int(1L) } -> std::convertible_to<T>;
  { FieldTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

/// A field that contains the imaginary unit.
template <class T>
concept ComplexField = Field<T> && requires {
  { FieldTraits<T>::imag_unit() } -> std::convertible_to<T>;
};

template <Field T>
bool is_zero(const T& v) {
  return FieldTraits<T>::is_zero(v);
}

}  // namespace oscint
