#include <cmath>
#include <stdexcept>

#include "oscint/reversion/reversion.hpp"

namespace oscint {

LocalExpansionCoeffs local_coefficients(LocalKind kind, int count) {
  switch (kind) {
    case LocalKind::quadratic: return {kind, oracle_recurrence(RecurrenceFamily::central_binomial, count)};
    case LocalKind::cubic_kappa: return {kind, oracle_recurrence(RecurrenceFamily::cubic_kappa, count)};
    case LocalKind::cubic_lambda: return {kind, oracle_recurrence(RecurrenceFamily::cubic_lambda, count)};
    case LocalKind::quartic_eta: return {kind, oracle_recurrence(RecurrenceFamily::quartic_eta, count)};
  }
  throw std::invalid_argument("unknown local expansion kind");
}

ComplexSeries local_expansion(int n, double x0, int order) {
  if (x0 == 0.0) throw std::invalid_argument("local expansion needs x0 != 0");
  if (order < 0) throw std::invalid_argument("local expansion order must be non-negative");
  std::vector<Complex> c(static_cast<std::size_t>(order + 1));
  switch (n) {
    case 2: {
      const auto b = local_coefficients(LocalKind::quadratic, order + 1).values;
      for (int l = 0; l <= order; ++l) c[l] = b[l].to_double() * std::pow(-1.0 / (2.0 * x0), l);
      break;
    }
    case 3: {
      const int half = order / 2 + 1;
      const auto kappa = local_coefficients(LocalKind::cubic_kappa, half).values;
      const auto lambda = local_coefficients(LocalKind::cubic_lambda, half).values;
      const double r3 = std::sqrt(3.0);
      for (int j = 0; 2 * j <= order; ++j) {
        c[2 * j] = (2 * j + 1) * kappa[j].to_double() / std::pow(r3 * x0, 2 * j);
        if (2 * j + 1 <= order) c[2 * j + 1] = -(2 * j + 2) * lambda[j].to_double() * r3 / std::pow(r3 * x0, 2 * j + 1);
      }
      break;
    }
    case 4: {
      const auto eta = local_coefficients(LocalKind::quartic_eta, order + 1).values;
      for (int j = 0; j <= order; ++j) c[j] = (j + 1) * eta[j].to_double() * std::pow(-1.0 / (2.0 * x0), j);
      break;
    }
    default: throw std::invalid_argument("local expansion is available for n = 2, 3, 4");
  }
  return ComplexSeries(PowerSeries<Complex>(std::move(c), order), VariableKind::power_of_x);
}

}  // namespace oscint
