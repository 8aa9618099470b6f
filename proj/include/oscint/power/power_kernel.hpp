#pragma once

#include <vector>

#include "oscint/core/field.hpp"

namespace oscint {

/// The pure-power kernel ∫ x^m e^{i c x^n} dx.
struct PowerKernelSpec {
  int m = 0;
  int n = 1;
  double c = 1.0;

  void validate() const;
  /// (m+1)/n, the gamma-function parameter of the kernel.
  double a() const { return (m + 1.0) / n; }
};

struct SeriesValue {
  Complex value{0.0, 0.0};
  double error = 0.0;  ///< first omitted term plus accumulated rounding
  int terms = 0;
  bool converged = false;
};

/// Σ_{l=0}^{L} (ic)^l u^{m+nl+1} / ((m+nl+1) l!), stopping early once the
/// remaining terms fall below rounding level. Throws NumericalError when a
/// term overflows.
SeriesValue taylor_partial(const PowerKernelSpec& spec, double u, int L);

/// V(u) = u^{m+1}/(m+1) · 1F1(1; 1+(m+1)/n; -icu^n), the factor with
/// ∫₀ᵘ x^m e^{icx^n} dx = V(u) e^{icu^n}. Throws NumericalError when the
/// 1F1 series has not settled after L terms.
SeriesValue kummer_V(const PowerKernelSpec& spec, double u, int L);

/// ∫₀^∞ x^m e^{icx^n} dx = (1/n) (i/c)^{(m+1)/n} Γ((m+1)/n), principal branch.
/// For m+1 ≥ n this is the Abel-regularized value.
Complex complete_power(const PowerKernelSpec& spec);

/// ∫₀ᵘ x^m e^{icx^n} dx via the upper incomplete gamma function:
/// complete_power − u^{m+1} e^{icu^n} / (n f) with f the continued
/// fraction of Γ((m+1)/n, −icu^n).
SeriesValue gamma_route(const PowerKernelSpec& spec, double u);

/// One chain of integration by parts lowering m below n:
///   ∫₀ᵘ x^m e^{icx^n} dx = Σ_k boundary[k].coeff · u^{boundary[k].power} e^{icu^n}
///                          + residual_weight · ∫₀ᵘ x^{residual.m} e^{icx^n} dx.
/// Every boundary power is positive, so the lower limit contributes nothing.
struct PowerReduction {
  struct Boundary {
    Complex coeff;
    int power;
  };
  std::vector<Boundary> boundary;
  Complex residual_weight{1.0, 0.0};
  PowerKernelSpec residual;

  /// Reassembles the value given the residual integral.
  Complex assemble(double u, Complex residual_value) const;
};

PowerReduction reduce_power_m(const PowerKernelSpec& spec);

enum class PowerRoute { taylor, gamma_cf, closed_form };

struct PowerValue {
  Complex value{0.0, 0.0};
  double error = 0.0;
  PowerRoute route = PowerRoute::taylor;
  int terms = 0;
};

/// |c|u^n at or below this uses the Taylor series, above it the continued fraction.
inline constexpr double kPowerRouteThreshold = 8.0;

/// ∫₀ᵘ x^m e^{icx^n} dx with automatic route choice; u = +inf gives the
/// complete integral.
PowerValue power_integral(const PowerKernelSpec& spec, double u);

}  // namespace oscint
