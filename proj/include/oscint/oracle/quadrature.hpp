#pragma once

#include "oscint/core/field.hpp"
#include "oscint/general/problem.hpp"

namespace oscint {

struct OracleResult {
  Complex value{0.0, 0.0};
  double abs_error = 0.0;  ///< Σ |K15 − G7| over the final intervals
  int subdivisions = 0;
  bool converged = false;  ///< false when max_subdiv ran out first
};

/// Brute-force ∫₀ᵘ p e^{iφ} dx by adaptive 7/15-point Gauss–Kronrod
/// bisection, pre-split at the zeros of φ′ and wherever φ crosses a
/// multiple of π. Refuses (NumericalError) when the pre-split alone would
/// need more than 10000 intervals. Independent of the series machinery.
OracleResult oracle_integrate(const ProblemSpec& spec, double tol = 1e-13, int max_subdiv = 50000);

}  // namespace oscint
