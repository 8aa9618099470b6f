#pragma once

#include <string>

#include "oscint/core/field.hpp"
#include "oscint/general/problem.hpp"

namespace oscint {

struct EvalConfig {
  int K = 40;          ///< q-iteration depth
  int T = 12;          ///< Laurent order searched for the optimal truncation
  int J = 200;         ///< Taylor terms for the complete integral
  double tol = 1e-10;  ///< target error relative to max(1, |I|)
  double window_lo = 0.8;
  double window_hi = 3.0;
  int window_points = 45;
  int match_terms = 3;     ///< nonzero asymptotic terms used by matching
  double step_phase = 4.0; ///< phase budget Σ|φ̃_j| h^j of one q segment
  int max_segments = 2000;

  /// Throws std::invalid_argument on non-positive entries or tol < 1e-14.
  void validate() const;
  /// Sets one field from its name; throws std::invalid_argument on unknown keys.
  void set(const std::string& key, const std::string& value);
};

enum class Method { taylor_q, asymptotic_match, complete_closed_form, reduced_composite };

std::string to_string(Method method);

struct EvalDiagnostics {
  int leaves = 0;
  int transformations = 0;
  int q_terms = 0;
  int segments = 0;
  int laurent_terms = 0;
  int complete_terms = 0;
  int power_taylor = 0;
  int power_gamma = 0;
};

struct IntegralResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  Method method = Method::taylor_q;
  EvalDiagnostics diagnostics;
};

/// I_{p,φ}(u) for finite u ≥ 0 or u = kInfinity (deg φ ≥ 2 required there).
/// Throws NumericalError when no route reaches cfg.tol.
IntegralResult evaluate(const ProblemSpec& spec, const EvalConfig& cfg = {});

}  // namespace oscint
