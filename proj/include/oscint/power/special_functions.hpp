#pragma once

#include "oscint/core/field.hpp"

namespace oscint {

/// Γ(a). Throws std::domain_error at the poles a = 0, -1, -2, ...
double gamma_fn(double a);

/// log|Γ(a)|. Throws std::domain_error at the poles.
double log_gamma(double a);

/// Value f of the continued fraction
///   f = b_0 + a_1/(b_1 + a_2/(b_2 + ...)),  b_k = 2k+1+z-s,  a_k = k(s-k),
/// so that Γ(s,z) = z^s e^{-z} / f. Modified Lentz iteration; throws
/// NumericalError when it fails to settle within the iteration cap (|z| too
/// small for this route).
Complex gamma_cf_denominator(double s, Complex z);

/// Upper incomplete gamma Γ(s,z) by the continued fraction above.
Complex gamma_cf(double s, Complex z);

/// Lower incomplete gamma γ(s,z) = Γ(s) - Γ(s,z).
Complex lower_gamma(double s, Complex z);

struct BesselValue {
  double value = 0.0;
  double error = 0.0;  ///< rounding estimate from the sum of term magnitudes
};

/// J_ν(x) for ν > -1, x ≥ 0 by the ascending series. Limited to x ≤ 30;
/// beyond that cancellation eats every digit and the call throws.
BesselValue bessel_j(double nu, double x);

}  // namespace oscint
