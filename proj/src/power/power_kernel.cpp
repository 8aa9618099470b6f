#include "oscint/power/power_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oscint/core/errors.hpp"
#include "oscint/power/special_functions.hpp"

namespace oscint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// e^{i c u^n}, kept as an explicit polar form so c → -c conjugates exactly.
Complex phasor(double c, double u, int n) { return std::polar(1.0, c * std::pow(u, n)); }

}  // namespace

void PowerKernelSpec::validate() const {
  if (m < 0) throw std::invalid_argument("power kernel needs m >= 0");
  if (n < 1) throw std::invalid_argument("power kernel needs n >= 1");
  if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("power kernel needs a finite nonzero c");
}

SeriesValue taylor_partial(const PowerKernelSpec& spec, double u, int L) {
  spec.validate();
  if (L < 1) throw std::invalid_argument("taylor_partial needs L >= 1");
  if (u < 0.0) throw std::invalid_argument("taylor_partial needs u >= 0");
  if (u == 0.0) return {{0.0, 0.0}, 0.0, 0, true};

  const Complex z{0.0, spec.c * std::pow(u, spec.n)};
  // power = (icu^n)^l u^{m+1} / l!
  Complex power = std::pow(u, spec.m + 1);
  Complex sum{0.0, 0.0};
  double magnitude = 0.0;
  SeriesValue out;
  for (int l = 0; l <= L; ++l) {
    if (l > 0) power *= z / static_cast<double>(l);
    const Complex term = power / static_cast<double>(spec.m + spec.n * l + 1);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw NumericalError("Taylor term overflow at u = " + std::to_string(u) + "; u is too large for this route");
    }
    sum += term;
    magnitude += std::abs(term);
    out.terms = l + 1;
    if (l > std::abs(z) && std::abs(term) <= 0.25 * kEps * std::abs(sum)) {
      out.converged = true;
      break;
    }
  }
  const int l = out.terms;
  const double omitted = std::abs(power * z / static_cast<double>(l)) / (spec.m + spec.n * l + 1);
  out.value = sum;
  out.error = (out.converged ? 0.0 : omitted) + kEps * magnitude;
  if (!out.converged) out.converged = omitted <= kEps * magnitude;
  return out;
}

SeriesValue kummer_V(const PowerKernelSpec& spec, double u, int L) {
  spec.validate();
  if (u < 0.0) throw std::invalid_argument("kummer_V needs u >= 0");
  if (u == 0.0) return {{0.0, 0.0}, 0.0, 0, true};

  const double b = 1.0 + spec.a();
  const Complex z{0.0, -spec.c * std::pow(u, spec.n)};
  Complex term{1.0, 0.0};
  Complex sum = term;
  double magnitude = 1.0;
  int k = 1;
  bool settled = false;
  for (; k <= L; ++k) {
    term *= z / (b + k - 1.0);
    sum += term;
    magnitude += std::abs(term);
    if (k > std::abs(z) && std::abs(term) <= 0.25 * kEps * std::abs(sum)) {
      settled = true;
      break;
    }
  }
  if (!settled) throw NumericalError("1F1 series for V did not settle within " + std::to_string(L) + " terms");
  const double scale = std::pow(u, spec.m + 1) / (spec.m + 1.0);
  return {scale * sum, scale * kEps * magnitude, k + 1, true};
}

Complex complete_power(const PowerKernelSpec& spec) {
  spec.validate();
  const double a = spec.a();
  const double theta = spec.c > 0.0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
  const double modulus = std::exp(log_gamma(a) - a * std::log(std::abs(spec.c))) / spec.n;
  return std::polar(modulus, a * theta);
}

SeriesValue gamma_route(const PowerKernelSpec& spec, double u) {
  spec.validate();
  if (u <= 0.0) throw std::invalid_argument("gamma route needs u > 0");
  const Complex z{0.0, -spec.c * std::pow(u, spec.n)};
  const Complex f = gamma_cf_denominator(spec.a(), z);
  const Complex tail = std::pow(u, spec.m + 1) * phasor(spec.c, u, spec.n) / (static_cast<double>(spec.n) * f);
  const Complex complete = complete_power(spec);
  const Complex value = complete - tail;
  return {value, 4.0 * kEps * (std::abs(complete) + std::abs(tail)) + 1e-15 * std::abs(tail), 0, true};
}

Complex PowerReduction::assemble(double u, Complex residual_value) const {
  Complex acc = residual_weight * residual_value;
  if (!boundary.empty()) {
    const Complex e = phasor(residual.c, u, residual.n);
    for (const auto& b : boundary) acc += b.coeff * std::pow(u, b.power) * e;
  }
  return acc;
}

PowerReduction reduce_power_m(const PowerKernelSpec& spec) {
  spec.validate();
  PowerReduction out;
  out.residual = spec;
  // ∫x^m e = x^{m-n+1} e / (icn) - (m-n+1)/(icn) ∫x^{m-n} e
  const Complex icn{0.0, spec.c * spec.n};
  Complex weight{1.0, 0.0};
  int m = spec.m;
  while (m >= spec.n) {
    const int power = m - spec.n + 1;
    out.boundary.push_back({weight / icn, power});
    weight *= -static_cast<double>(power) / icn;
    m -= spec.n;
  }
  out.residual.m = m;
  out.residual_weight = weight;
  return out;
}

PowerValue power_integral(const PowerKernelSpec& spec, double u) {
  spec.validate();
  if (std::isinf(u) && u > 0.0) return {complete_power(spec), 4.0 * kEps * std::abs(complete_power(spec)), PowerRoute::closed_form, 0};
  if (!(u >= 0.0)) throw std::invalid_argument("upper limit must be non-negative");
  if (u == 0.0) return {{0.0, 0.0}, 0.0, PowerRoute::taylor, 0};

  if (std::abs(spec.c) * std::pow(u, spec.n) <= kPowerRouteThreshold) {
    const SeriesValue t = taylor_partial(spec, u, 200);
    return {t.value, t.error, PowerRoute::taylor, t.terms};
  }
  const SeriesValue g = gamma_route(spec, u);
  return {g.value, g.error, PowerRoute::gamma_cf, g.terms};
}

}  // namespace oscint
