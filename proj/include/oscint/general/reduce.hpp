#pragma once

#include <vector>

#include "oscint/core/field.hpp"
#include "oscint/general/problem.hpp"

namespace oscint {

/// One weighted piece of a reduced problem: weight · ∫_{lower}^{spec.u} p e^{iφ}.
///
/// A nonzero lower limit only occurs for pure-power pieces produced by
/// completing a square, where it may be negative; the integrand is then
/// understood as the analytic t^m e^{ict^n} on the whole real line.
struct Subproblem {
  ProblemSpec spec;
  Complex weight{1.0, 0.0};
  double lower = 0.0;

  /// p = x^m and φ = c x^n.
  bool is_power() const;
};

struct ReducedProblem {
  Complex prefactor{1.0, 0.0};
  std::vector<Subproblem> subproblems;
  Complex boundary_terms{0.0, 0.0};
  double boundary_magnitude = 0.0;  ///< Σ of the boundary pieces' magnitudes, for rounding bounds
  /// Count of division, substitution and square-completion steps taken.
  int transformations = 0;

  /// prefactor · (Σ weight_k · value_k + boundary_terms).
  Complex assemble(const std::vector<Complex>& values) const;
};

/// Rewrites I_{p,φ}(u) as boundary terms plus pure-power pieces and general
/// pieces with α₀ = 0 and deg p < deg φ − 1. At u = ∞ boundary terms from
/// the upper limit are dropped (their Abel limit).
ReducedProblem reduce(const ProblemSpec& spec);

}  // namespace oscint
