#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oscint/core/big_rational.hpp"
#include "oscint/core/poly.hpp"

namespace oscint::testing {

// Deterministic generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Coefficients in [-bound, bound] rounded to 1/8 so that every value is
  // exact in binary.
  double coefficient(double bound) {
    double v = 0.0;
    while (v == 0.0) v = std::round(real(-bound, bound) * 8.0) / 8.0;
    return v;
  }

  Polynomial poly(int max_degree, double bound, double density = 0.7) {
    const int d = integer(0, max_degree);
    std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
    for (auto& v : c)
      if (coin(density)) v = coefficient(bound);
    c.back() = coefficient(bound);
    return Polynomial(c);
  }

  // Phase with zero constant term and degree in [1, max_degree].
  Polynomial phase(int max_degree, double bound) {
    const int d = integer(1, max_degree);
    std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
    for (std::size_t k = 1; k < c.size(); ++k)
      if (coin(0.7)) c[k] = coefficient(bound);
    c.back() = coefficient(bound);
    return Polynomial(c);
  }

  BigRational rational(int num_bound, int den_bound) {
    return BigRational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  Poly<BigRational> rational_poly(int min_degree, int max_degree, bool zero_constant) {
    const int d = integer(min_degree, max_degree);
    std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
    for (std::size_t k = zero_constant ? 1 : 0; k < c.size(); ++k) c[k] = rational(5, 4);
    while (c.back().is_zero()) c.back() = rational(5, 4);
    return Poly<BigRational>(c);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oscint::testing
