#pragma once

#include "oscint/core/field.hpp"
#include "oscint/core/poly.hpp"

namespace oscint {

struct CompleteIntegral {
  Complex value{0.0, 0.0};
  int terms_used = 0;
  double tail_estimate = 0.0;
  double rounding_estimate = 0.0;

  double error() const { return tail_estimate + rounding_estimate; }
};

/// I(∞) = ∫₀^∞ p e^{iφ} dx for deg φ = l ≥ 2 from the Taylor coefficients t_j
/// of p(x) e^{i Σ_{1≤j<l} α_j x^j}:
///   l · e^{−iα₀} I = Σ_j t_j Γ((1+j)/l) (i/α_l)^{(1+j)/l}.
/// Throws NumericalError when J terms leave a tail above tol · max(1, |I|).
CompleteIntegral complete_general(const Polynomial& p, const Polynomial& phi, int J, double tol);

struct MatchWindow {
  double lo = 0.8;
  double hi = 3.0;
  int points = 45;
};

struct MatchResult {
  CompleteIntegral estimate;  ///< tail_estimate is the spread over usable grid points
  double x = 0.0;             ///< grid point the estimate was taken at
  double indicator = 0.0;     ///< combined truncation indicator at x
  int usable_points = 0;
};

/// I(∞) from the constant gap e^{iφ(x)} [Σ_{k≤K} q_{2k+1}(x) − Σ h_j x^{−j}]
/// between the small-x and large-x solutions, with the asymptotic sum cut
/// after its first T nonzero terms. The grid point with the smallest
/// combined truncation indicator wins. Requires deg p < deg φ − 1.
MatchResult match_infinity(const Polynomial& p, const Polynomial& phi, int K, int T, const MatchWindow& window);

}  // namespace oscint
