#pragma once

#include <vector>

#include "oscint/core/big_rational.hpp"

namespace oscint {

/// ∫₀ᵘ sin(x^n) dx = d_n Σ_{s≥0} ξ_{n,s} J_{2s+ν}(u^n),  ν = 1 + 1/n.
struct NeumannExpansion {
  int n = 0;
  double d_n = 0.0;
  std::vector<BigRational> xi;
  BigRational nu;  ///< order of the first Bessel function
};

/// Exact ξ_{n,0..S} for n in 2..5 with the matching prefactor d_n.
NeumannExpansion neumann_coeffs(int n, int S);

/// Prefactor d_n for n in 2..5.
double neumann_prefactor(int n);

/// (2/n) Γ(1/n) sin(π/(2n)), the value ξ_{n,s} d_n settles towards.
double neumann_tail_limit(int n);

/// Partial Neumann sum at u. Throws NumericalError when the tail after the
/// available terms exceeds tol, or when u^n is out of reach of the
/// ascending Bessel series.
double neumann_eval(const NeumannExpansion& exp, double u, double tol = 1e-12);

}  // namespace oscint
