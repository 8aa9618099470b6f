#include "oscint/core/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oscint {

namespace {

struct Term {
  bool negative = false;
  std::string coefficient;  // empty means an implicit 1
  std::size_t power = 0;
};

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

// Consumes a numeric literal (digits, '.', exponent, optional "/denominator").
std::string read_number(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && (is_digit(s[pos]) || s[pos] == '.')) ++pos;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    std::size_t look = pos + 1;
    if (look < s.size() && (s[look] == '+' || s[look] == '-')) ++look;
    if (look < s.size() && is_digit(s[look])) {
      pos = look;
      while (pos < s.size() && is_digit(s[pos])) ++pos;
    }
  }
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
  }
  return s.substr(start, pos - start);
}

std::vector<Term> tokenize(std::string_view original) {
  const std::string s = strip_spaces(original);
  if (s.empty()) fail(original, "empty input");
  std::vector<Term> terms;

  if (s.find(',') != std::string::npos) {
    std::size_t power = 0;
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t comma = s.find(',', start);
      std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) fail(original, "empty coefficient in list");
      Term t;
      if (item.front() == '+' || item.front() == '-') {
        t.negative = item.front() == '-';
        item.erase(0, 1);
      }
      std::size_t pos = 0;
      t.coefficient = read_number(item, pos);
      if (t.coefficient.empty() || pos != item.size()) fail(original, "bad coefficient \"" + item + "\"");
      t.power = power++;
      terms.push_back(std::move(t));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return terms;
  }

  std::size_t pos = 0;
  while (pos < s.size()) {
    Term t;
    if (s[pos] == '+' || s[pos] == '-') {
      t.negative = s[pos] == '-';
      ++pos;
    } else if (!terms.empty()) {
      fail(original, "expected '+' or '-' between terms");
    }
    t.coefficient = read_number(s, pos);
    if (pos < s.size() && s[pos] == '*') {
      if (t.coefficient.empty()) fail(original, "dangling '*'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') fail(original, "expected x after '*'");
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      t.power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (start == pos) fail(original, "missing exponent after '^'");
        t.power = std::stoul(s.substr(start, pos - start));
      }
    } else if (t.coefficient.empty()) {
      fail(original, "unexpected character at position " + std::to_string(pos));
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

double to_double(const std::string& literal, std::string_view original) {
  if (const auto slash = literal.find('/'); slash != std::string::npos) {
    return to_double(literal.substr(0, slash), original) / to_double(literal.substr(slash + 1), original);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
  if (ec != std::errc() || ptr != literal.data() + literal.size()) fail(original, "bad number \"" + literal + "\"");
  return value;
}

template <Field C, class Convert>
Poly<C> assemble(const std::vector<Term>& terms, Convert convert) {
  std::size_t top = 0;
  for (const Term& t : terms) top = std::max(top, t.power);
  std::vector<C> coeffs(top + 1, FieldTraits<C>::zero());
  for (const Term& t : terms) {
    C value = t.coefficient.empty() ? FieldTraits<C>::one() : convert(t.coefficient);
    if (t.negative) value = -value;
    coeffs[t.power] = coeffs[t.power] + value;
  }
  return Poly<C>(std::move(coeffs));
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class C, class Magnitude>
std::string format_terms(const Poly<C>& p, Magnitude magnitude_text) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    auto [negative, mag] = magnitude_text(c[k]);
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") {
      out += mag;
      // Fractions and exponent notation read better with an explicit product.
      if (mag.find_first_of("/eE") != std::string::npos) out += "*";
    }
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const auto terms = tokenize(text);
  return assemble<double>(terms, [&](const std::string& lit) { return to_double(lit, text); });
}

Poly<BigRational> parse_rational_polynomial(std::string_view text) {
  const auto terms = tokenize(text);
  return assemble<BigRational>(terms, [](const std::string& lit) { return BigRational::parse(lit); });
}

std::string format_polynomial(const Polynomial& p) {
  return format_terms(p, [](double v) { return std::pair{std::signbit(v), shortest(std::abs(v))}; });
}

std::string format_polynomial(const Poly<BigRational>& p) {
  return format_terms(p, [](const BigRational& v) { return std::pair{v.sign() < 0, v.abs().to_string()}; });
}

}  // namespace oscint
