#pragma once

#include <cmath>
#include <limits>

#include "oscint/core/poly.hpp"

namespace oscint {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// I(u) = ∫₀ᵘ p(x) e^{iφ(x)} dx; u = kInfinity requests the complete integral.
struct ProblemSpec {
  Polynomial p;
  Polynomial phi;
  double u = 0.0;

  bool infinite() const { return std::isinf(u) && u > 0.0; }
  /// Throws std::invalid_argument unless deg φ ≥ 1, p ≠ 0 and u ≥ 0.
  void validate() const;
};

}  // namespace oscint
