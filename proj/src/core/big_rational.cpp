#include "oscint/core/big_rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace oscint {

namespace {

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad integer literal: " + std::string(text));
    }
  }
  mpz_class value(std::string(text), 10);
  return negative ? mpz_class(-value) : value;
}

mpq_class parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  std::size_t pos = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad numeric literal: " + std::string(text));
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw std::invalid_argument("bad numeric literal: " + std::string(text));
    }
    exponent = parse_integer(text.substr(pos + 1)).get_si();
  }
  mpq_class value{mpz_class(digits, 10)};
  const long shift = exponent - fraction_digits;
  if (shift >= 0) {
    value *= mpq_class(pow10(static_cast<unsigned long>(shift)));
  } else {
    value /= mpq_class(pow10(static_cast<unsigned long>(-shift)));
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

}  // namespace

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::from_mpq(mpq_class value) {
  BigRational result;
  result.value_ = std::move(value);
  result.value_.canonicalize();
  return result;
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value has no rational form");
  BigRational result;
  mpq_set_d(result.value_.get_mpq_t(), value);
  return result;
}

BigRational BigRational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in " + std::string(text));
    return from_mpq(mpq_class(num, den));
  }
  return from_mpq(parse_decimal(text));
}

std::string BigRational::to_string() const { return value_.get_str(10); }

std::string BigRational::numerator_string() const { return value_.get_num().get_str(10); }

std::string BigRational::denominator_string() const { return value_.get_den().get_str(10); }

double BigRational::to_double() const { return value_.get_d(); }

std::string BigRational::to_decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  if (is_zero()) return "0";
  const mpq_class magnitude = ::abs(value_);

  // Locate e with 10^(e-1) <= |v| < 10^e.
  long e = static_cast<long>(std::floor(std::log10(magnitude.get_d()))) + 1;
  auto power = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                  : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (magnitude >= power(e)) ++e;
  while (magnitude < power(e - 1)) --e;

  const mpq_class scaled = magnitude * power(significant - e) + mpq_class(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();
  if (rounded == pow10(static_cast<unsigned long>(significant))) {
    rounded /= 10;
    ++e;
  }
  const std::string digits = rounded.get_str(10);

  std::string out = sign() < 0 ? "-" : "";
  if (e <= 0) {
    out += "." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else if (e >= significant) {
    out += digits + std::string(static_cast<std::size_t>(e - significant), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(e)) + "." + digits.substr(static_cast<std::size_t>(e));
  }
  return out;
}

BigRational BigRational::abs() const { return from_mpq(::abs(value_)); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return from_mpq(mpq_class(1) / value_);
}

BigRational BigRational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return from_mpq(mpq_class(num, den));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return from_mpq(-value_); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  const std::string imag = (im.sign() < 0 ? "-" : "+") + im.abs().to_string() + "i";
  if (re.is_zero()) return im.sign() < 0 ? imag : imag.substr(1);
  return re.to_string() + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  BigRational real = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(real);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  const BigRational denom = rhs.norm();
  if (denom.is_zero()) throw std::domain_error("division by zero");
  *this *= rhs.conj();
  re /= denom;
  im /= denom;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << value.to_string(); }

}  // namespace oscint
