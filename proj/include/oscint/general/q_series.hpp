#pragma once

#include <cstddef>
#include <vector>

#include "oscint/core/big_rational.hpp"
#include "oscint/core/poly.hpp"
#include "oscint/core/series.hpp"

namespace oscint {

/// q_1 = ∫₀ p, q_{2k+1} = −i ∫₀ q_{2k−1} φ′; returns q_1, q_3, ..., q_{2K+1}.
template <ComplexField C>
std::vector<Poly<C>> q_partials(const Poly<C>& p, const Poly<C>& phi, int K) {
  const C minus_i = -FieldTraits<C>::imag_unit();
  const Poly<C> dphi = phi.derivative();
  std::vector<Poly<C>> out;
  out.reserve(static_cast<std::size_t>(K) + 1);
  out.push_back(p.antiderivative());
  for (int k = 1; k <= K; ++k) out.push_back((out.back() * dphi).antiderivative() * minus_i);
  return out;
}

/// Same iteration started from q_{-1} = seed, which is itself kept as the
/// first entry. With a constant seed ε the sum tends to ε e^{−iφ}.
template <ComplexField C>
std::vector<Poly<C>> q_partials_seeded(const Poly<C>& seed, const Poly<C>& phi, int K) {
  const C minus_i = -FieldTraits<C>::imag_unit();
  const Poly<C> dphi = phi.derivative();
  std::vector<Poly<C>> out{seed};
  for (int k = 0; k <= K; ++k) out.push_back((out.back() * dphi).antiderivative() * minus_i);
  return out;
}

/// p − i q φ′ − q′ as an exact polynomial.
template <ComplexField C>
Poly<C> ode_residual_poly(const Poly<C>& q, const Poly<C>& p, const Poly<C>& phi) {
  return p - q * phi.derivative() * FieldTraits<C>::imag_unit() - q.derivative();
}

/// Order through which the residual of Σ_{k≤K} q_{2k+1} vanishes:
/// v(p) + K(v(φ′)+1) + v(φ′), v the lowest power present.
std::size_t q_residual_zero_order(std::size_t p_valuation, std::size_t dphi_valuation, int K);

Poly<GaussianRational> to_gaussian(const Poly<BigRational>& p);
Poly<Complex> to_complex(const Polynomial& p);

/// Value of Σ q_{2k+1}(x) with the bookkeeping the evaluator needs.
struct QEvaluation {
  Complex sum{0.0, 0.0};
  double last_term = 0.0;  ///< |q_{2k+1}(x)| of the last term included
  double rounding = 0.0;   ///< eps · Σ (k+1) Σ_j |c_j| x^j
  int terms = 0;
  bool converged = false;  ///< trailing terms below rounding level
  bool diverging = false;  ///< the last three terms each grew

  double error() const { return last_term + rounding; }
};

struct QSeries {
  std::vector<Poly<Complex>> partials;
  int K = 0;
  ComplexSeries sum;

  /// Sums the partials at x ≥ 0, stopping once they drop below rounding level.
  QEvaluation evaluate(double x) const;
};

QSeries q_iterate(const Polynomial& p, const Polynomial& phi, int K);

/// p − iqφ′ − q′ for a polynomial q given as a series in x (coefficients past
/// its order taken as zero); the result is exact through its own order.
ComplexSeries ode_residual(const ComplexSeries& q, const Polynomial& p, const Polynomial& phi);

}  // namespace oscint
