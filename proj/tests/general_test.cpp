#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscint/core/errors.hpp"
#include "oscint/core/poly_io.hpp"
#include "oscint/general/complete.hpp"
#include "oscint/general/evaluate.hpp"
#include "oscint/general/laurent.hpp"
#include "oscint/general/q_series.hpp"
#include "oscint/general/reduce.hpp"
#include "oscint/oracle/quadrature.hpp"
#include "support.hpp"

namespace oscint {
namespace {

using Q = BigRational;
using G = GaussianRational;
using GPoly = Poly<GaussianRational>;

Complex oracle(const Polynomial& p, const Polynomial& phi, double u) {
  return oracle_integrate({p, phi, u}, 1e-14).value;
}

GPoly sum(const std::vector<GPoly>& parts) {
  GPoly s;
  for (const auto& q : parts) s += q;
  return s;
}

TEST(QSeries, ResidualIsExactlyTheLastCorrection) {
  testing::Gen g(41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = to_gaussian(g.rational_poly(0, 3, false));
    const auto phi = to_gaussian(g.rational_poly(1, 4, true));
    const int K = g.integer(1, 10);
    const auto parts = q_partials(p, phi, K);
    ASSERT_EQ(parts.size(), static_cast<std::size_t>(K) + 1);
    const GPoly residual = ode_residual_poly(sum(parts), p, phi);
    // p − i S φ′ − S′ = −i φ′ q_{2K+1}
    EXPECT_EQ(residual, parts.back() * phi.derivative() * -G::i());
    const std::size_t zero_through = q_residual_zero_order(*p.valuation(), *phi.derivative().valuation(), K);
    for (std::size_t k = 0; k <= zero_through; ++k) EXPECT_TRUE(residual.coeff(k).is_zero()) << k;
  }
}

TEST(QSeries, HomogeneousSeedTendsToPhaseFactor) {
  const Polynomial phi = parse_polynomial("x-0.5x^2+x^3");
  const Complex eps{0.3, -0.2};
  const auto parts = q_partials_seeded(Poly<Complex>::constant(eps), to_complex(phi), 40);
  for (double x : {0.2, 0.7, 1.1}) {
    Complex s{0.0, 0.0};
    for (const auto& q : parts) s += q(Complex{x, 0.0});
    EXPECT_LT(std::abs(s - eps * std::polar(1.0, -phi(x))), 1e-13) << x;
  }
}

TEST(QSeries, HomogeneousSeedTaylorCoefficients) {
  // exact Taylor coefficients of ε e^{−iφ} from E′ = −iφ′E
  const Poly<Q> phi_q = parse_rational_polynomial("2x-x^2+3x^3");
  const GPoly phi = to_gaussian(phi_q);
  const G eps(Q(3, 2), Q(-1, 5));
  const GPoly dphi = phi.derivative();
  std::vector<G> e{eps};
  for (std::size_t k = 1; k < 6; ++k) {
    G acc;
    for (std::size_t j = 0; j < k; ++j) acc += dphi.coeff(j) * e[k - 1 - j];
    e.push_back(-G::i() * acc / G(static_cast<long>(k)));
  }
  const GPoly s = sum(q_partials_seeded(GPoly::constant(eps), phi, 8));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(s.coeff(k), e[k]) << k;
}

TEST(QSeries, EvaluationReportsConvergence) {
  const QSeries q = q_iterate(parse_polynomial("1+x"), parse_polynomial("x+x^3"), 40);
  const QEvaluation near = q.evaluate(0.8);
  EXPECT_TRUE(near.converged);
  EXPECT_FALSE(near.diverging);
  EXPECT_LT(near.error(), 1e-14);
  // the series sums to the solution with zero initial value: ∫₀ˣ p e^{iφ} = q e^{iφ}
  const Complex want = oracle(parse_polynomial("1+x"), parse_polynomial("x+x^3"), 0.8);
  EXPECT_LT(std::abs(near.sum * std::polar(1.0, 0.8 + 0.512) - want), 1e-13);
  const QEvaluation far = q_iterate(parse_polynomial("1"), parse_polynomial("x^4"), 10).evaluate(3.0);
  EXPECT_FALSE(far.converged);
  EXPECT_THROW(q_iterate(parse_polynomial("1"), parse_polynomial("1+x^2"), 5), std::invalid_argument);
}

TEST(QSeries, NumericResidualSeries) {
  const Polynomial p = parse_polynomial("2-x^2"), phi = parse_polynomial("x^2+0.5x^3");
  const QSeries q = q_iterate(p, phi, 12);
  const ComplexSeries r = ode_residual(q.sum, p, phi);
  for (int k = 0; k <= 20; ++k) EXPECT_LT(std::abs(r[k]), 1e-14) << k;
}

TEST(Laurent, WorkedExampleCoefficients) {
  const AsymptoticSeries a = laurent_coeffs(2, parse_polynomial("x+x^4"), 7);
  const Complex i{0.0, 1.0};
  EXPECT_LT(std::abs(a.h[1] - (-0.25 * i)), 1e-15);
  EXPECT_EQ(a.h[2], Complex{});
  EXPECT_EQ(a.h[3], Complex{});
  EXPECT_LT(std::abs(a.h[4] - 0.0625 * i), 1e-15);
  EXPECT_LT(std::abs(a.h[5] - (-0.0625)), 1e-15);
  EXPECT_EQ(a.h[6], Complex{});
  EXPECT_LT(std::abs(a.h[7] - (-0.015625 * i)), 1e-15);
}

TEST(Laurent, ExactResidualVanishes) {
  testing::Gen g(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = to_gaussian(g.rational_poly(2, 5, true));
    const int l = static_cast<int>(*phi.degree());
    const auto p = to_gaussian(g.rational_poly(0, l - 2, false));
    const int T = g.integer(1, 12);
    const auto h = laurent_h(p, phi, T);
    for (const auto& [e, v] : laurent_residual(h, p, phi)) EXPECT_TRUE(v.is_zero()) << "x^" << e;
  }
}

TEST(Laurent, SupportCoversEveryNonzeroCoefficient) {
  testing::Gen g(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto phi = g.rational_poly(2, 5, true);
    const int l = static_cast<int>(*phi.degree());
    const auto p = g.rational_poly(0, l - 2, false);
    const auto h = laurent_h(to_gaussian(p), to_gaussian(phi), 15);
    const auto support = laurent_support(p, phi, 15);
    for (int t = 1; t <= 15; ++t)
      if (!h[static_cast<std::size_t>(t)].is_zero()) {
        EXPECT_TRUE(support[static_cast<std::size_t>(t)]) << t;
      }
  }
  EXPECT_THROW(laurent_coeffs(3, parse_polynomial("x+x^4"), 5), std::invalid_argument);
}

TEST(Complete, FresnelAndShiftedFresnel) {
  const double r = std::sqrt(std::numbers::pi / 8.0);
  const Complex fresnel{r, r};
  const CompleteIntegral c = complete_general(parse_polynomial("1"), parse_polynomial("x^2"), 200, 1e-14);
  EXPECT_LT(std::abs(c.value - fresnel), 1e-15);
  // x + x² = (x + 1/2)² − 1/4
  const Complex head = oracle(parse_polynomial("1"), parse_polynomial("x^2"), 0.5);
  const Complex want = std::polar(1.0, -0.25) * (fresnel - head);
  const CompleteIntegral s = complete_general(parse_polynomial("1"), parse_polynomial("x+x^2"), 200, 1e-14);
  EXPECT_LT(std::abs(s.value - want), 1e-13);
  EXPECT_THROW(complete_general(parse_polynomial("1"), parse_polynomial("x+x^2"), 3, 1e-14), NumericalError);
}

TEST(Complete, LongFiniteIntegralApproachesCompleteValue) {
  // the tail beyond u is O(1/φ′(u)) in size
  const Polynomial p = parse_polynomial("1-x"), phi = parse_polynomial("x^2+x^3");
  const CompleteIntegral c = complete_general(p, phi, 200, 1e-14);
  const double u = 12.0;
  const IntegralResult r = evaluate({p, phi, u});
  EXPECT_LT(std::abs(r.value - c.value), 2.0 * std::abs(p(u)) / phi.derivative()(u));
}

TEST(Matching, GapConstancy) {
  const Polynomial p = parse_polynomial("x^2"), phi = parse_polynomial("x+x^4");
  const QSeries q = q_iterate(p, phi, 40);
  const AsymptoticSeries h = laurent_coeffs(2, phi, 5);
  auto gap = [&](double x) { return std::polar(1.0, phi(x)) * (q.evaluate(x).sum - h.h.evaluate(x)); };
  const Complex ref = gap(1.7);
  for (double x = 1.7; x <= 1.9 + 1e-12; x += 0.02) EXPECT_LT(std::abs(gap(x) - ref), 1e-2) << x;
}

TEST(Matching, GapIsConstantAcrossTheWindow) {
  const Polynomial p = parse_polynomial("x^2"), phi = parse_polynomial("x+x^4");
  const Complex exact = complete_general(p, phi, 200, 1e-14).value;
  const MatchResult narrow = match_infinity(p, phi, 40, 3, {1.6, 2.0, 21});
  const MatchResult wide = match_infinity(p, phi, 40, 3, {0.8, 3.0, 45});
  EXPECT_LT(std::abs(narrow.estimate.value - exact), 2e-2);
  EXPECT_LT(std::abs(wide.estimate.value - exact), 2e-2);
  EXPECT_LT(std::abs(narrow.estimate.value - wide.estimate.value), 5e-3);
  EXPECT_GT(narrow.usable_points, 0);
  // more asymptotic terms push the estimate towards the exact value
  const MatchResult more = match_infinity(p, phi, 60, 5, {0.8, 3.0, 45});
  EXPECT_LT(std::abs(more.estimate.value - exact), std::abs(narrow.estimate.value - exact));
}

TEST(Reduce, ReassemblyMatchesQuadrature) {
  testing::Gen g(44);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = g.poly(5, 2.0), phi = g.phase(4, 2.0) + Polynomial::constant(g.coin() ? 0.0 : g.coefficient(1.0));
    const double u = g.real(0.1, 2.0);
    const ProblemSpec spec{p, phi, u};
    const ReducedProblem red = reduce(spec);
    std::vector<Complex> values;
    // reassembly can cancel large pieces; judge relative to their size
    double scale = red.boundary_magnitude;
    for (const Subproblem& s : red.subproblems) {
      ASSERT_FALSE(s.spec.infinite());
      ASSERT_LE(s.lower, s.spec.u);
      const double a = s.lower;
      values.push_back(oracle(s.spec.p.shifted(a), s.spec.phi.shifted(a), s.spec.u - a));
      scale += std::abs(s.weight * values.back());
    }
    scale *= std::abs(red.prefactor);
    const Complex want = oracle(p, phi, u);
    EXPECT_LT(std::abs(red.assemble(values) - want), 1e-12 * std::max({1.0, std::abs(want), scale}))
        << format_polynomial(p) << " | " << format_polynomial(phi) << " u=" << u;
  }
}

TEST(Reduce, Transformations) {
  const ReducedProblem even = reduce({parse_polynomial("x"), parse_polynomial("x^2+x^4"), 1.0});
  EXPECT_GE(even.transformations, 1);
  const ReducedProblem square = reduce({parse_polynomial("1"), parse_polynomial("x+x^2"), 1.0});
  ASSERT_EQ(square.subproblems.size(), 1u);
  EXPECT_TRUE(square.subproblems[0].is_power());
  EXPECT_DOUBLE_EQ(square.subproblems[0].lower, 0.5);
  const ReducedProblem plain = reduce({parse_polynomial("1+x"), parse_polynomial("x+x^3"), 1.0});
  EXPECT_EQ(plain.transformations, 0);
  EXPECT_EQ(plain.subproblems.size(), 1u);
  EXPECT_EQ(plain.boundary_terms, Complex{});
}

TEST(Evaluate, AgreesWithQuadrature) {
  testing::Gen g(45);
  for (int trial = 0; trial < 120; ++trial) {
    const Polynomial p = g.poly(4, 2.0), phi = g.phase(5, 2.0);
    const double u = g.real(0.1, 3.0);
    const IntegralResult r = evaluate({p, phi, u});
    const OracleResult q = oracle_integrate({p, phi, u}, 1e-12);
    EXPECT_LE(std::abs(r.value - q.value), std::max(1e-8, r.error_estimate + q.abs_error))
        << format_polynomial(p) << " | " << format_polynomial(phi) << " u=" << u;
  }
}

TEST(Evaluate, ConjugatePhaseGivesConjugateValue) {
  testing::Gen g(46);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = g.poly(3, 2.0), phi = g.phase(5, 2.0);
    const double u = g.coin(0.2) ? kInfinity : g.real(0.1, 4.0);
    if (std::isinf(u) && (*phi.degree() < 2 || *p.degree() + 1 >= *phi.degree())) continue;
    Complex a, b;
    try {
      a = evaluate({p, phi, u}).value;
    } catch (const NumericalError&) {
      EXPECT_THROW(evaluate({p, -phi, u}), NumericalError);
      continue;
    }
    b = evaluate({p, -phi, u}).value;
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST(Evaluate, IntervalsAdd) {
  testing::Gen g(47);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = g.poly(3, 2.0), phi = g.phase(4, 2.0);
    const double u1 = g.real(0.1, 1.5), u2 = u1 + g.real(0.1, 1.5);
    // ∫_{u1}^{u2} = ∫₀^{u2−u1} p(u1+t) e^{iφ(u1+t)} dt
    const Complex middle = evaluate({p.shifted(u1), phi.shifted(u1), u2 - u1}).value;
    const Complex total = evaluate({p, phi, u2}).value;
    EXPECT_LT(std::abs(evaluate({p, phi, u1}).value + middle - total), 1e-9 * std::max(1.0, std::abs(total)));
  }
}

TEST(Evaluate, LinearInTheAmplitude) {
  testing::Gen g(48);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p1 = g.poly(3, 2.0), p2 = g.poly(3, 2.0), phi = g.phase(4, 2.0);
    if ((p1 + p2).is_zero()) continue;
    const double u = g.real(0.1, 3.0);
    const IntegralResult a = evaluate({p1, phi, u}), b = evaluate({p2, phi, u}), s = evaluate({p1 + p2, phi, u});
    EXPECT_LE(std::abs(a.value + b.value - s.value), a.error_estimate + b.error_estimate + s.error_estimate + 1e-14);
  }
}

TEST(Evaluate, ConstantPhaseIsAFactor) {
  const IntegralResult a = evaluate({parse_polynomial("1"), parse_polynomial("2+x^3"), 1.2});
  const IntegralResult b = evaluate({parse_polynomial("1"), parse_polynomial("x^3"), 1.2});
  EXPECT_LT(std::abs(a.value - std::polar(1.0, 2.0) * b.value), 1e-15);
}

TEST(Evaluate, LargeLimitsStayAccurate) {
  const Polynomial p = parse_polynomial("1+x^2"), phi = parse_polynomial("x+0.5x^3");
  for (double u : {5.0, 8.0}) {
    const IntegralResult r = evaluate({p, phi, u});
    const OracleResult q = oracle_integrate({p, phi, u}, 1e-13);
    EXPECT_LT(std::abs(r.value - q.value), 1e-8) << u;
  }
}

TEST(Evaluate, MethodTags) {
  const Polynomial one = parse_polynomial("1"), cubic = parse_polynomial("x^3");
  EXPECT_EQ(evaluate({one, cubic, 0.5}).method, Method::taylor_q);
  EXPECT_EQ(evaluate({one, cubic, 4.0}).method, Method::asymptotic_match);
  EXPECT_EQ(evaluate({one, cubic, kInfinity}).method, Method::complete_closed_form);
  EXPECT_EQ(evaluate({parse_polynomial("1+x"), parse_polynomial("x+x^3"), 0.5}).method, Method::taylor_q);
  EXPECT_EQ(evaluate({parse_polynomial("x^3"), parse_polynomial("x+x^3"), 0.5}).method, Method::reduced_composite);
}

TEST(Evaluate, EdgeCases) {
  EXPECT_EQ(evaluate({parse_polynomial("x^2"), parse_polynomial("x+x^4"), 0.0}).value, Complex{});
  EXPECT_THROW(evaluate({parse_polynomial("1"), parse_polynomial("x"), kInfinity}), std::invalid_argument);
  EXPECT_THROW(evaluate({parse_polynomial("1"), parse_polynomial("x^2"), -1.0}), std::invalid_argument);
  EXPECT_THROW(evaluate({parse_polynomial("1"), parse_polynomial("2"), 3.0}), std::invalid_argument);
  EXPECT_THROW(evaluate({Polynomial{}, parse_polynomial("x"), 3.0}), std::invalid_argument);
  EvalConfig tight;
  tight.max_segments = 1;
  tight.K = 5;
  EXPECT_THROW(evaluate({parse_polynomial("1"), parse_polynomial("x+x^2+x^5"), 1.6}, tight), NumericalError);
}

TEST(EvalConfig, SetAndValidate) {
  EvalConfig cfg;
  cfg.set("K", "25");
  cfg.set("tol", "1e-9");
  EXPECT_EQ(cfg.K, 25);
  EXPECT_EQ(cfg.tol, 1e-9);
  EXPECT_THROW(cfg.set("nope", "1"), std::invalid_argument);
  EXPECT_THROW(cfg.set("K", "2x"), std::invalid_argument);
  cfg.tol = 1e-16;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace oscint
