#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscint/core/errors.hpp"
#include "oscint/oracle/quadrature.hpp"
#include "oscint/power/neumann.hpp"
#include "oscint/power/power_kernel.hpp"
#include "oscint/power/special_functions.hpp"
#include "support.hpp"

namespace oscint {
namespace {

constexpr double kPi = std::numbers::pi;

Complex oracle_power(int m, int n, double c, double u) {
  const ProblemSpec spec{Polynomial::monomial(1.0, static_cast<std::size_t>(m)), Polynomial::monomial(c, static_cast<std::size_t>(n)), u};
  return oracle_integrate(spec, 1e-14).value;
}

TEST(SpecialFunctions, GammaValues) {
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(gamma_fn(5.0), 24.0, 1e-13);
  EXPECT_NEAR(log_gamma(0.25), std::log(3.6256099082219083119), 1e-15);
  EXPECT_THROW(gamma_fn(0.0), std::domain_error);
  EXPECT_THROW(gamma_fn(-2.0), std::domain_error);
}

TEST(SpecialFunctions, UpperIncompleteGammaHalf) {
  // Γ(1/2, x) = √π erfc(√x)
  for (double x : {1.5, 4.0, 9.0, 25.0}) {
    const Complex v = gamma_cf(0.5, {x, 0.0});
    const double want = std::sqrt(kPi) * std::erfc(std::sqrt(x));
    EXPECT_NEAR(v.real(), want, 1e-14 * want) << x;
    EXPECT_NEAR(v.imag(), 0.0, 1e-14 * want);
  }
  EXPECT_NEAR(gamma_cf(0.5, {4.0, 0.0}).real(), 0.0082910693806726582, 1e-17);
}

TEST(SpecialFunctions, IncompleteGammaIntegerOrder) {
  // Γ(2, z) = (1 + z) e^{-z}, also off the real axis
  for (Complex z : {Complex{3.0, 0.0}, Complex{0.0, 5.0}, Complex{2.0, -7.0}}) {
    const Complex want = (1.0 + z) * std::exp(-z);
    EXPECT_LT(std::abs(gamma_cf(2.0, z) - want), 1e-13 * std::abs(want));
    EXPECT_LT(std::abs(lower_gamma(2.0, z) + want - 1.0), 1e-13);
  }
  EXPECT_THROW(gamma_cf_denominator(0.5, {1e-9, 0.0}), NumericalError);
}

TEST(SpecialFunctions, BesselHalfOrder) {
  for (double x : {0.1, 1.0, 7.5, 20.0}) {
    const BesselValue j = bessel_j(0.5, x);
    EXPECT_NEAR(j.value, std::sqrt(2.0 / (kPi * x)) * std::sin(x), 1e-13 + 10 * j.error);
  }
  EXPECT_EQ(bessel_j(1.5, 0.0).value, 0.0);
  EXPECT_THROW(bessel_j(0.5, 40.0), NumericalError);
}

TEST(PowerKernel, RejectsBadSpecs) {
  EXPECT_THROW(PowerKernelSpec({-1, 2, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW(PowerKernelSpec({0, 0, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW(PowerKernelSpec({0, 2, 0.0}).validate(), std::invalid_argument);
}

TEST(PowerKernel, CompleteFresnel) {
  const Complex want = std::sqrt(kPi) / 2.0 * std::polar(1.0, kPi / 4.0);
  EXPECT_LT(std::abs(complete_power({0, 2, 1.0}) - want), 1e-15);
  EXPECT_LT(std::abs(complete_power({0, 2, -1.0}) - std::conj(want)), 1e-15);
  // scaling x -> x / c^{1/n}
  const Complex scaled = complete_power({1, 3, 8.0});
  EXPECT_LT(std::abs(scaled - complete_power({1, 3, 1.0}) / 4.0), 1e-15);
}

TEST(PowerKernel, CompleteSineIntegrals) {
  // ∫₀^∞ sin(x^n) dx = Γ(1+1/n) sin(π/(2n))
  for (int n = 2; n <= 6; ++n) {
    const double want = std::tgamma(1.0 + 1.0 / n) * std::sin(kPi / (2.0 * n));
    EXPECT_NEAR(complete_power({0, n, 1.0}).imag(), want, 1e-15 * want) << n;
  }
}

TEST(PowerKernel, RoutesAgreeInTheOverlap) {
  int gamma_checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int m = 0; m < n; ++m) {
      for (double c : {1.0, -1.0}) {
        for (double u : {0.3, 0.9, 1.5}) {
          const PowerKernelSpec spec{m, n, c};
          const SeriesValue t = taylor_partial(spec, u, 400);
          ASSERT_TRUE(t.converged);
          const double scale = std::abs(t.value);
          const SeriesValue v = kummer_V(spec, u, 400);
          const Complex kummer = v.value * std::polar(1.0, c * std::pow(u, n));
          EXPECT_LT(std::abs(t.value - kummer), 1e-10 * scale) << "m=" << m << " n=" << n << " c=" << c << " u=" << u;
          try {
            const SeriesValue g = gamma_route(spec, u);
            EXPECT_LT(std::abs(t.value - g.value), 1e-10 * scale) << "m=" << m << " n=" << n << " c=" << c << " u=" << u;
            ++gamma_checked;
          } catch (const NumericalError&) {
            // the continued fraction refuses small |c|u^n
          }
        }
      }
    }
  }
  EXPECT_GT(gamma_checked, 40);
}

TEST(PowerKernel, TrivialKernels) {
  // m = n − 1 integrates in closed form
  const Complex i{0.0, 1.0};
  const double u = 0.7;
  const Complex closed = (std::polar(1.0, u * u * u) - 1.0) / (3.0 * i);
  EXPECT_LT(std::abs(taylor_partial({2, 3, 1.0}, u, 100).value - closed), 1e-15);
  const double w = 1.3;
  const Complex v = (1.0 - std::polar(1.0, -w * w)) / (2.0 * i);
  EXPECT_LT(std::abs(kummer_V({1, 2, 1.0}, w, 200).value - v), 1e-15);
  EXPECT_EQ(taylor_partial({0, 2, 1.0}, 0.0, 10).value, Complex{});
  EXPECT_EQ(kummer_V({0, 2, 1.0}, 0.0, 10).value, Complex{});
  EXPECT_NEAR(gamma_cf(1.0, {1.0, 0.0}).real(), 0.36787944117144233, 1e-16);
}

TEST(PowerKernel, IncompleteGammaRouteAtTwo) {
  const SeriesValue t = taylor_partial({0, 3, 1.0}, 2.0, 400);
  const SeriesValue g = gamma_route({0, 3, 1.0}, 2.0);
  EXPECT_LT(std::abs(t.value - g.value), 1e-12);
}

TEST(PowerKernel, MatchesQuadrature) {
  testing::Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = g.integer(1, 5), m = g.integer(0, 4);
    const double c = g.coefficient(3.0), u = g.real(0.05, 4.0);
    const PowerValue v = power_integral({m, n, c}, u);
    const Complex q = oracle_power(m, n, c, u);
    EXPECT_LT(std::abs(v.value - q), 1e-10 * std::max(1.0, std::abs(q))) << "m=" << m << " n=" << n << " c=" << c << " u=" << u;
  }
}

TEST(PowerKernel, ConjugationFlipsFrequency) {
  testing::Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.integer(2, 5), m = g.integer(0, 4);
    const double c = g.coefficient(2.0), u = g.real(0.1, 5.0);
    const Complex a = power_integral({m, n, c}, u).value, b = power_integral({m, n, -c}, u).value;
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST(PowerKernel, KummerFactorHasTheIntegralModulus) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (double u : {0.5, 1.2, 1.6}) {
        if (std::pow(u, n) > kPowerRouteThreshold) continue;
        const SeriesValue v = kummer_V({m, n, 1.0}, u, 2000);
        const Complex want = oracle_power(m, n, 1.0, u);
        EXPECT_NEAR(std::abs(v.value), std::abs(want), 1e-14 + v.error) << "m=" << m << " n=" << n << " u=" << u;
      }
    }
  }
}

TEST(PowerKernel, ReductionReassembles) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = n - 1; m <= 3 * n; ++m) {
      const PowerKernelSpec spec{m, n, 0.75};
      const PowerReduction r = reduce_power_m(spec);
      EXPECT_LT(r.residual.m, n);
      for (double u : {0.6, 1.7}) {
        const Complex direct = oracle_power(m, n, 0.75, u);
        const Complex via = r.assemble(u, power_integral(r.residual, u).value);
        EXPECT_LT(std::abs(direct - via), 1e-10 * std::max(1.0, std::abs(direct))) << "m=" << m << " n=" << n;
      }
    }
  }
}

TEST(PowerKernel, RouteSelection) {
  EXPECT_EQ(power_integral({0, 2, 1.0}, 1.0).route, PowerRoute::taylor);
  EXPECT_EQ(power_integral({0, 2, 1.0}, 5.0).route, PowerRoute::gamma_cf);
  EXPECT_EQ(power_integral({0, 2, 1.0}, std::numeric_limits<double>::infinity()).route, PowerRoute::closed_form);
  EXPECT_EQ(power_integral({0, 2, 1.0}, 0.0).value, Complex(0.0, 0.0));
}

TEST(Neumann, QuadraticCoefficientsAreOne) {
  const NeumannExpansion e = neumann_coeffs(2, 12);
  for (const auto& x : e.xi) EXPECT_EQ(x, BigRational(1));
}

TEST(Neumann, CoefficientsApproachTheTailLimit) {
  for (int n = 3; n <= 5; ++n) {
    const NeumannExpansion e = neumann_coeffs(n, 30);
    const double limit = neumann_tail_limit(n);
    const double last = e.xi.back().to_double() * e.d_n;
    const double earlier = e.xi[10].to_double() * e.d_n;
    EXPECT_LT(std::abs(last - limit), std::abs(earlier - limit)) << n;
    EXPECT_LT(std::abs(last - limit), 0.05 * limit) << n;
  }
}

TEST(Neumann, SumMatchesSineIntegral) {
  for (int n = 2; n <= 5; ++n) {
    const NeumannExpansion e = neumann_coeffs(n, 39);
    for (double u : {0.2, 0.8, 1.0, 1.3}) {
      if (std::pow(u, n) > 4.0) continue;
      const double want = oracle_power(0, n, 1.0, u).imag();
      EXPECT_NEAR(neumann_eval(e, u), want, 1e-12) << "n=" << n << " u=" << u;
    }
  }
}

TEST(Neumann, AgreesWithTaylorRoute) {
  const double t = taylor_partial({0, 3, 1.0}, 1.0, 200).value.imag();
  EXPECT_NEAR(neumann_eval(neumann_coeffs(3, 30), 1.0), t, 1e-10);
  EXPECT_EQ(neumann_eval(neumann_coeffs(3, 5), 0.0), 0.0);
}

TEST(Neumann, RefusesWhenTheTailIsTooLarge) {
  const NeumannExpansion e = neumann_coeffs(3, 3);
  EXPECT_THROW(neumann_eval(e, 2.5, 1e-12), NumericalError);
}

}  // namespace
}  // namespace oscint
