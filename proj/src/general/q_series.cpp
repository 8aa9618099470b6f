#include "oscint/general/q_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscint {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

std::size_t q_residual_zero_order(std::size_t p_valuation, std::size_t dphi_valuation, int K) {
  return p_valuation + static_cast<std::size_t>(K) * (dphi_valuation + 1) + dphi_valuation;
}

Poly<GaussianRational> to_gaussian(const Poly<BigRational>& p) {
  return p.map<GaussianRational>([](const BigRational& v) { return GaussianRational{v, BigRational(0)}; });
}

Poly<Complex> to_complex(const Polynomial& p) {
  return p.map<Complex>([](double v) { return Complex{v, 0.0}; });
}

QEvaluation QSeries::evaluate(double x) const {
  if (x < 0.0) throw std::invalid_argument("q series is evaluated at x >= 0 only");
  QEvaluation out;
  double prev[2] = {-1.0, -1.0};
  int quiet = 0;
  double weighted_abs = 0.0;
  for (std::size_t k = 0; k < partials.size(); ++k) {
    const auto& q = partials[k];
    const Complex term = q(x);
    double abs_poly = 0.0;
    for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) abs_poly = abs_poly * x + std::abs(*it);
    out.sum += term;
    weighted_abs += static_cast<double>(k + 1) * abs_poly;
    out.terms = static_cast<int>(k + 1);
    const double mag = std::abs(term);
    out.diverging = k >= 2 && mag > prev[1] && prev[1] > prev[0] && prev[0] >= 0.0;
    out.last_term = mag;
    prev[0] = prev[1];
    prev[1] = mag;
    // the terms go to zero factorially once they start falling; two quiet
    // terms in a row end the sum
    quiet = mag <= 0.25 * kEps * std::abs(out.sum) ? quiet + 1 : 0;
    if (quiet >= 2) {
      out.converged = true;
      out.diverging = false;
      out.last_term = 0.0;
      break;
    }
  }
  out.rounding = kEps * weighted_abs;
  if (!out.converged && out.last_term <= out.rounding) out.converged = true;
  return out;
}

QSeries q_iterate(const Polynomial& p, const Polynomial& phi, int K) {
  if (K < 0) throw std::invalid_argument("q iteration depth must be non-negative");
  if (phi.coeff(0) != 0.0) throw std::invalid_argument("q iteration expects a phase with zero constant term");
  QSeries out;
  out.K = K;
  out.partials = q_partials(to_complex(p), to_complex(phi), K);
  Poly<Complex> total;
  for (const auto& q : out.partials) total += q;
  const int order = total.degree() ? static_cast<int>(*total.degree()) : 0;
  out.sum = ComplexSeries(PowerSeries<Complex>::from_poly(total, order), VariableKind::power_of_x);
  return out;
}

ComplexSeries ode_residual(const ComplexSeries& q, const Polynomial& p, const Polynomial& phi) {
  if (q.kind() != VariableKind::power_of_x) throw std::invalid_argument("ode_residual expects a series in x");
  const Poly<Complex> qp = q.series().to_poly();
  const Poly<Complex> r = ode_residual_poly(qp, to_complex(p), to_complex(phi));
  const std::size_t dphi = phi.derivative().degree().value_or(0);
  const int order = std::max<int>(static_cast<int>(p.degree().value_or(0)), q.order() + static_cast<int>(dphi));
  return ComplexSeries(PowerSeries<Complex>::from_poly(r, order), VariableKind::power_of_x);
}

}  // namespace oscint
