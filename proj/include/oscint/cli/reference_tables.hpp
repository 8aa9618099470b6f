#pragma once

#include <span>

namespace oscint::ref {

/// Reference complete integrals I_{p,φ}(∞), 17 digits per part.
struct InfinityRow {
  const char* p;
  const char* phi;
  double re;
  double im;
};
std::span<const InfinityRow> infinity_rows();

/// Reference Neumann coefficients ξ_{n,s} with their 26-digit decimals.
struct NeumannRow {
  int n;
  int s;
  const char* fraction;
  const char* decimal;
};
std::span<const NeumannRow> neumann_rows();

/// Reference decimal values of the Neumann prefactors d_3, d_4, d_5.
double neumann_prefactor_reference(int n);

/// Reference Im ∫₀^∞ e^{ix^n} dx = ∫₀^∞ sin(x^n) dx for n = 2, 3, 4.
double complete_sine_reference(int n);

/// Reference local-series sequences κ, λ, η.
std::span<const long> kappa_reference();
std::span<const long> lambda_reference();
std::span<const long> eta_reference();

/// Two-digit reference spot estimate for p = x², φ = x + x⁴ by matching.
inline constexpr double kMatchSpotRe = -0.07116;
inline constexpr double kMatchSpotIm = 0.20606;

}  // namespace oscint::ref
