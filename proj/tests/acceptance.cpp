// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when
// every line passes.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oscint/cli/cli.hpp"
#include "oscint/cli/reference_tables.hpp"
#include "oscint/core/poly_io.hpp"
#include "oscint/general/complete.hpp"
#include "oscint/general/evaluate.hpp"
#include "oscint/general/laurent.hpp"
#include "oscint/general/q_series.hpp"
#include "oscint/oracle/quadrature.hpp"
#include "oscint/power/neumann.hpp"
#include "oscint/power/power_kernel.hpp"
#include "oscint/reversion/reversion.hpp"
#include "support.hpp"

namespace {

using namespace oscint;
using Q = BigRational;

constexpr double kTable5Tol = 1e-12;
constexpr double kTable5Seconds = 10.0;
constexpr double kPrefactorRelTol = 1e-12;
constexpr double kSineRelTol = 1e-15;
constexpr double kLaurentTol = 1e-15;
constexpr double kSpotTol = 5e-3;
constexpr double kTableMatchTol = 2e-2;
constexpr double kOracleFloor = 1e-8;
constexpr double kConjugateTol = 1e-13;
constexpr double kExtremumTol = 1e-6;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome check_table5() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string worst_row;
  for (const auto& r : ref::infinity_rows()) {
    const Complex v = complete_general(parse_polynomial(r.p), parse_polynomial(r.phi), 200, 1e-14).value;
    const double d = std::max(std::abs(v.real() - r.re), std::abs(v.imag() - r.im));
    if (d > worst) worst = d, worst_row = std::string(r.p) + " | " + r.phi;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= kTable5Tol && secs < kTable5Seconds,
          fmt::format("{} rows, max |d| {:.2g} ({}), {:.2f} s", ref::infinity_rows().size(), worst, worst_row, secs)};
}

Outcome check_neumann() {
  int exact = 0, total = 0;
  double worst = 0.0;
  for (int n = 3; n <= 5; ++n) {
    const NeumannExpansion e = neumann_coeffs(n, 10);
    for (const auto& r : ref::neumann_rows()) {
      if (r.n != n) continue;
      ++total;
      const Q& xi = e.xi[static_cast<std::size_t>(r.s)];
      if (xi == Q::parse(r.fraction) && xi.to_decimal(26) == r.decimal) ++exact;
    }
    const double ref_d = ref::neumann_prefactor_reference(n);
    worst = std::max(worst, std::abs(e.d_n - ref_d) / ref_d);
  }
  return {exact == total && total == 33 && worst <= kPrefactorRelTol,
          fmt::format("{}/{} coefficients exact, prefactor rel. dev. {:.2g}", exact, total, worst)};
}

Outcome check_sine_integrals() {
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const double ref_v = ref::complete_sine_reference(n);
    worst = std::max(worst, std::abs(complete_power({0, n, 1.0}).imag() - ref_v) / ref_v);
  }
  return {worst <= kSineRelTol, fmt::format("max rel. dev. {:.2g}", worst)};
}

Outcome check_laurent() {
  const AsymptoticSeries a = laurent_coeffs(2, parse_polynomial("x+x^4"), 7);
  const Complex i{0.0, 1.0};
  const std::vector<Complex> want{{}, -0.25 * i, {}, {}, 0.0625 * i, Complex{-0.0625, 0.0}, {}, -0.015625 * i};
  double worst = 0.0;
  for (int t = 1; t <= 7; ++t) worst = std::max(worst, std::abs(a.h[t] - want[static_cast<std::size_t>(t)]));
  return {worst <= kLaurentTol, fmt::format("h1..h7 max dev. {:.2g}", worst)};
}

Outcome check_matching() {
  const Polynomial p = parse_polynomial("x^2"), phi = parse_polynomial("x+x^4");
  const MatchResult m = match_infinity(p, phi, 40, 3, {1.6, 2.0, 41});
  const Complex spot{ref::kMatchSpotRe, ref::kMatchSpotIm};
  Complex table;
  for (const auto& r : ref::infinity_rows())
    if (std::string(r.p) == "x^2" && std::string(r.phi) == "x+x^4") table = {r.re, r.im};
  const double ds = std::abs(m.estimate.value - spot), dt = std::abs(m.estimate.value - table);
  return {ds <= kSpotTol && dt <= kTableMatchTol,
          fmt::format("{} at x={:.3f}; spot dev. {:.2g}, table dev. {:.2g}", cli::format_complex(m.estimate.value), m.x,
                      ds, dt)};
}

Outcome check_reversion() {
  constexpr int order = 10;
  int ok = 0;
  std::string bad;
  const auto families = reversion_families();
  for (RecurrenceFamily f : families) {
    const Poly<Q> alpha = family_polynomial(f);
    const RationalSeries beta = revert_multinomial(alpha, order).beta;
    const std::vector<Q> b(beta.coeffs().begin(), beta.coeffs().end());
    bool good = true;
    for (long j = recurrence_start(f); j <= order; ++j) good = good && recurrence_residual(f, b, j).is_zero();
    good = good && RationalSeries::from_poly(alpha, order).compose(beta) == RationalSeries::variable(order);
    if (good) ++ok;
    else bad += " " + to_string(f);
  }
  return {ok == static_cast<int>(families.size()) && families.size() == 10,
          fmt::format("{}/{} families{}", ok, families.size(), bad.empty() ? "" : "; failing:" + bad)};
}

Outcome check_local_sequences() {
  auto matches = [](LocalKind kind, std::span<const long> want) {
    const auto got = local_coefficients(kind, static_cast<int>(want.size())).values;
    for (std::size_t i = 0; i < want.size(); ++i)
      if (got[i] != Q(want[i])) return false;
    return true;
  };
  const bool seq = matches(LocalKind::cubic_kappa, ref::kappa_reference()) &&
                   matches(LocalKind::cubic_lambda, ref::lambda_reference()) &&
                   matches(LocalKind::quartic_eta, ref::eta_reference());
  // κ_n = 27^n (5/6)_n (1/3)_n / [n! (3/2)_n]
  const auto kappa = local_coefficients(LocalKind::cubic_kappa, 12).values;
  bool closed = true;
  Q v(1);
  for (int n = 0; n < 12; ++n) {
    closed = closed && kappa[static_cast<std::size_t>(n)] == v;
    v *= Q(27) * (Q(5, 6) + Q(n)) * (Q(1, 3) + Q(n)) / (Q(n + 1) * (Q(3, 2) + Q(n)));
  }
  return {seq && closed, fmt::format("sequences {}, kappa closed form {}", seq ? "exact" : "differ",
                                     closed ? "exact through n=11" : "differs")};
}

Outcome check_oracle_equivalence() {
  testing::Gen g(20261015);
  int failures = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = g.poly(4, 2.0), phi = g.phase(5, 2.0);
    const double u = g.real(0.1, 2.5);
    const IntegralResult r = evaluate({p, phi, u});
    const OracleResult q = oracle_integrate({p, phi, u}, 1e-13);
    const double allowed = std::max(kOracleFloor, r.error_estimate + q.abs_error);
    const double d = std::abs(r.value - q.value);
    worst_ratio = std::max(worst_ratio, d / allowed);
    if (d > allowed || !q.converged) ++failures;
  }
  return {failures == 0, fmt::format("50 problems, {} failures, worst delta/allowed {:.2g}", failures, worst_ratio)};
}

Outcome check_ode_residual() {
  testing::Gen g(9);
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = to_gaussian(g.rational_poly(0, 4, false));
    const auto phi = to_gaussian(g.rational_poly(1, 5, true));
    const auto parts = q_partials(p, phi, 15);
    Poly<GaussianRational> q;
    for (const auto& part : parts) q += part;
    const auto residual = ode_residual_poly(q, p, phi);
    const std::size_t through = q_residual_zero_order(*p.valuation(), *phi.derivative().valuation(), 15);
    for (std::size_t k = 0; k <= through; ++k)
      if (!residual.coeff(k).is_zero()) {
        ++failures;
        break;
      }
  }
  return {failures == 0, fmt::format("20 problems, K=15, {} with a nonzero low-order residual", failures)};
}

Outcome check_conjugation() {
  int pairs = 0;
  double worst = 0.0;
  const auto rows = ref::infinity_rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (std::string(rows[a].p) != rows[b].p) continue;
      const Polynomial pa = parse_polynomial(rows[a].phi), pb = parse_polynomial(rows[b].phi);
      if (!(pa == -pb)) continue;
      ++pairs;
      const Polynomial p = parse_polynomial(rows[a].p);
      const Complex va = complete_general(p, pa, 200, 1e-14).value, vb = complete_general(p, pb, 200, 1e-14).value;
      worst = std::max(worst, std::abs(va - std::conj(vb)));
    }
  }
  return {pairs > 0 && worst <= kConjugateTol, fmt::format("{} pairs, max |I(phi) - conj I(-phi)| {:.2g}", pairs, worst)};
}

Outcome check_curve_extrema() {
  int count = 0;
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (cli::Part part : {cli::Part::imag, cli::Part::real}) {
      const double u_max = std::pow(12.75 * std::numbers::pi, 1.0 / n);
      const auto ext = cli::curve_extrema(Polynomial::constant(1.0), Polynomial::monomial(1.0, static_cast<std::size_t>(n)),
                                          u_max, 100 * n, part);
      // Im I peaks at u^n = lπ (l ≥ 1), Re I at u^n = (l + 1/2)π (l ≥ 0)
      const double offset = part == cli::Part::imag ? 1.0 : 0.5;
      const std::size_t expected = part == cli::Part::imag ? 12 : 13;
      for (std::size_t k = 0; k < ext.size(); ++k) {
        const double want = std::pow((static_cast<double>(k) + offset) * std::numbers::pi, 1.0 / n);
        worst = std::max(worst, std::abs(ext[k].u - want));
        ++count;
      }
      if (ext.size() != expected) worst = std::max(worst, 1.0);
    }
  }
  return {worst <= kExtremumTol, fmt::format("{} extrema of Re/Im I for x^2, x^3, x^4, max |du| {:.2g}", count, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  complete integrals table", check_table5},
      {"2  Neumann coefficients", check_neumann},
      {"3  complete sine integrals", check_sine_integrals},
      {"4  asymptotic coefficients", check_laurent},
      {"5  matching estimate", check_matching},
      {"6  reversion families", check_reversion},
      {"7  local-series sequences", check_local_sequences},
      {"8  oracle equivalence", check_oracle_equivalence},
      {"9  q-series ODE residual", check_ode_residual},
      {"10 conjugation symmetry", check_conjugation},
      {"F  curve extrema", check_curve_extrema},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    fmt::print("{} {:<28} {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
  }
  return all ? 0 : 1;
}
