#include "oscint/power/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "oscint/core/errors.hpp"

namespace oscint {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kCfTol = 1e-15;
constexpr int kCfMaxIter = 1000;

void check_pole(double a) {
  if (a <= 0.0 && a == std::floor(a)) throw std::domain_error("gamma function pole at " + std::to_string(a));
}

}  // namespace

double gamma_fn(double a) {
  check_pole(a);
  return std::tgamma(a);
}

double log_gamma(double a) {
  check_pole(a);
  int sign = 0;
  return ::lgamma_r(a, &sign);
}

Complex gamma_cf_denominator(double s, Complex z) {
  if (z == Complex{0.0, 0.0}) throw std::invalid_argument("incomplete gamma continued fraction needs z != 0");
  auto floor_tiny = [](Complex v) { return std::abs(v) < kTiny ? Complex{kTiny, 0.0} : v; };

  Complex f = floor_tiny(z + 1.0 - s);
  Complex C = f;
  Complex D{0.0, 0.0};
  for (int k = 1; k <= kCfMaxIter; ++k) {
    const double a = k * (s - k);
    const Complex b = z + (2.0 * k + 1.0 - s);
    D = floor_tiny(b + a * D);
    C = floor_tiny(b + a / C);
    D = 1.0 / D;
    const Complex delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < kCfTol) return f;
  }
  throw NumericalError("incomplete gamma continued fraction did not converge at |z| = " + std::to_string(std::abs(z)));
}

Complex gamma_cf(double s, Complex z) {
  return std::exp(s * std::log(z) - z) / gamma_cf_denominator(s, z);
}

Complex lower_gamma(double s, Complex z) { return gamma_fn(s) - gamma_cf(s, z); }

BesselValue bessel_j(double nu, double x) {
  if (nu <= -1.0) throw std::invalid_argument("bessel_j supports orders above -1");
  if (x < 0.0) throw std::invalid_argument("bessel_j needs x >= 0");
  if (x > 30.0) throw NumericalError("ascending Bessel series is unreliable beyond x = 30");
  if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};

  const double half = 0.5 * x;
  const double q = -half * half;
  double term = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
  double sum = term;
  double magnitude = std::abs(term);
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    magnitude += std::abs(term);
    if (k > half && std::abs(term) <= std::numeric_limits<double>::epsilon() * 0.25 * std::abs(sum)) break;
  }
  return {sum, std::numeric_limits<double>::epsilon() * magnitude};
}

}  // namespace oscint
