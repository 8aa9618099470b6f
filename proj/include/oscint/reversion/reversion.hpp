#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscint/core/big_rational.hpp"
#include "oscint/core/errors.hpp"
#include "oscint/core/poly.hpp"
#include "oscint/core/series.hpp"

namespace oscint {

// Series reversion of a phase polynomial y = Σ_{j≥1} α_j x^j into
// x = Σ_{j≥1} β_j y^j.

enum class ReversionMethod { multinomial, perturbative };

struct ReversionResult {
  RationalSeries beta;  ///< β_0 = 0, β_1 = 1/α_1, ... through the requested order
  ReversionMethod method = ReversionMethod::multinomial;
  Poly<BigRational> input_alpha;
};

namespace detail {

inline void check_revertible(std::size_t alpha_size, bool constant_is_zero, bool linear_is_zero, int order) {
  if (alpha_size == 0) throw std::invalid_argument("cannot revert the zero polynomial");
  if (!constant_is_zero) throw std::invalid_argument("phase polynomial must have zero constant term before reversion");
  if (linear_is_zero) throw std::invalid_argument("reversion needs a nonzero linear coefficient");
  if (order < 1) throw std::invalid_argument("reversion order must be at least 1");
}

// Visits every (t_1, ..., t_m) with Σ i·t_i = weight and Σ t_i = count.
// counts[i] holds t_i; counts[0] is unused.
template <class Visit>
void for_each_composition(int index, int weight, int count, std::vector<int>& counts, Visit& visit) {
  if (index == 1) {
    if (weight == count) {
      counts[1] = count;
      visit(counts);
      counts[1] = 0;
    }
    return;
  }
  for (int t = 0; t * index <= weight && t <= count; ++t) {
    // the parts below `index` must still be able to absorb what is left
    const int rest_weight = weight - t * index;
    const int rest_count = count - t;
    if (rest_weight < rest_count || rest_weight > rest_count * (index - 1)) continue;
    counts[static_cast<std::size_t>(index)] = t;
    for_each_composition(index - 1, rest_weight, rest_count, counts, visit);
  }
  counts[static_cast<std::size_t>(index)] = 0;
}

inline unsigned long long binomial(int n, int k) {
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

}  // namespace detail

/// Reversion by the multinomial recurrence
///   α_1 β_t = -Σ_{j=2}^{min(t,l)} α_j Σ multinomial(j; t_1..t_m) Π β_i^{t_i},
/// summing over t_1 + 2t_2 + ... + m·t_m = t, t_1 + ... + t_m = j, m = t-j+1.
template <Field C>
PowerSeries<C> revert_series_multinomial(const Poly<C>& alpha, int order) {
  using Traits = FieldTraits<C>;
  detail::check_revertible(alpha.size(), is_zero(alpha.coeff(0)), is_zero(alpha.coeff(1)), order);
  if (order > 60) throw std::invalid_argument("multinomial reversion supports orders up to 60");
  const int l = static_cast<int>(*alpha.degree());

  std::vector<C> beta(static_cast<std::size_t>(order + 1), Traits::zero());
  beta[1] = Traits::one() / alpha.coeff(1);

  // powers[i][e] = β_i^e, grown lazily
  std::vector<std::vector<C>> powers(static_cast<std::size_t>(order + 1));
  auto beta_pow = [&](int i, int e) -> const C& {
    auto& row = powers[static_cast<std::size_t>(i)];
    if (row.empty()) row.push_back(Traits::one());
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * beta[static_cast<std::size_t>(i)]);
    return row[static_cast<std::size_t>(e)];
  };

  std::vector<int> counts(static_cast<std::size_t>(order + 1), 0);
  for (int t = 2; t <= order; ++t) {
    C rhs = Traits::zero();
    for (int j = 2; j <= std::min(t, l); ++j) {
      const C& aj = alpha.coeff(static_cast<std::size_t>(j));
      if (is_zero(aj)) continue;
      C inner = Traits::zero();
      auto visit = [&](const std::vector<int>& tc) {
        C term = Traits::one();
        int remaining = j;
        for (int i = 1; i < static_cast<int>(tc.size()); ++i) {
          const int ti = tc[static_cast<std::size_t>(i)];
          if (ti == 0) continue;
          term = term * Traits::from_int(static_cast<long>(detail::binomial(remaining, ti))) * beta_pow(i, ti);
          remaining -= ti;
        }
        inner = inner + term;
      };
      detail::for_each_composition(t - j + 1, t, j, counts, visit);
      rhs = rhs + aj * inner;
    }
    beta[static_cast<std::size_t>(t)] = -rhs / alpha.coeff(1);
  }
  return PowerSeries<C>(std::move(beta), order);
}

/// Reversion by fixed-point iteration x ← y' - Σ_{j≥2} (α_j/α_1) x^j on the
/// rescaled variable y' = y/α_1, starting from x = y'. Each sweep fixes at
/// least one more coefficient; the loop ends when the truncated series is
/// stationary.
template <Field C>
PowerSeries<C> revert_series_perturbative(const Poly<C>& alpha, int order, int max_iter) {
  using Traits = FieldTraits<C>;
  detail::check_revertible(alpha.size(), is_zero(alpha.coeff(0)), is_zero(alpha.coeff(1)), order);
  const std::size_t l = *alpha.degree();
  const C a1 = alpha.coeff(1);

  const PowerSeries<C> y = PowerSeries<C>::variable(order);
  PowerSeries<C> x = y;
  bool stationary = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    PowerSeries<C> next = y;
    PowerSeries<C> power = x;
    for (std::size_t j = 2; j <= l; ++j) {
      power = power * x;
      const C aj = alpha.coeff(j);
      if (!is_zero(aj)) next = next - power * (aj / a1);
    }
    if (next == x) {
      stationary = true;
      break;
    }
    x = std::move(next);
  }
  if (!stationary) {
    throw NumericalError("perturbative reversion did not become stationary within " + std::to_string(max_iter) +
                         " sweeps; raise the iteration budget or lower the order");
  }

  std::vector<C> beta(x.coeffs().begin(), x.coeffs().end());
  C scale = Traits::one();
  for (std::size_t j = 1; j < beta.size(); ++j) {
    scale = scale / a1;
    beta[j] = beta[j] * scale;
  }
  return PowerSeries<C>(std::move(beta), order);
}

ReversionResult revert_multinomial(const Poly<BigRational>& alpha, int order);
ReversionResult revert_perturbative(const Poly<BigRational>& alpha, int order, int max_iter = 256);

/// Double-precision reversion of a real polynomial, carried out in the
/// complex field with the same recurrences as the exact path.
PowerSeries<Complex> revert_numeric(const Polynomial& alpha, int order,
                                    ReversionMethod method = ReversionMethod::multinomial);

// ---------------------------------------------------------------------------
// Closed-form coefficient families used as independent oracles.

enum class RecurrenceFamily {
  x_plus_k_x2,    ///< y = x + k x^2
  x_plus_x3,      ///< y = x + x^3
  x_plus_x4,      ///< y = x + x^4
  x_plus_x5,      ///< y = x + x^5
  x_plus_2x3,     ///< y = x + 2x^3
  x_plus_2x4,     ///< y = x + 2x^4
  x_x2_x4,        ///< y = x + x^2 + x^4
  x_x3_x4,        ///< y = x + x^3 + x^4
  x_2x2_x3,       ///< y = x + 2x^2 + x^3
  x_x2_2x3,       ///< y = x + x^2 + 2x^3
  central_binomial,
  cubic_kappa,
  cubic_lambda,
  quartic_eta,
};

std::string to_string(RecurrenceFamily family);
RecurrenceFamily recurrence_family_from_string(const std::string& name);
std::vector<RecurrenceFamily> reversion_families();

/// The phase polynomial a reversion family belongs to (k only matters for
/// x_plus_k_x2). Throws for the local-series families.
Poly<BigRational> family_polynomial(RecurrenceFamily family, long k = 1);

/// First `count` terms of a family, generated from its recurrence alone:
///  - reversion families: β_1 .. β_count
///  - central_binomial: C(2l, l) for l = 0 .. count-1
///  - cubic_kappa / cubic_lambda: κ_0.. / λ_0..
///  - quartic_eta: η_1 .. η_count
std::vector<BigRational> oracle_recurrence(RecurrenceFamily family, int count, long k = 1);

/// Residual of the family's recurrence at index j for the sequence β
/// (β[i] = β_i, entries outside the vector treated as zero). Zero iff the
/// recurrence holds at j. Only reversion families.
BigRational recurrence_residual(RecurrenceFamily family, const std::vector<BigRational>& beta, long j, long k = 1);

/// First index at which the recurrence is asserted (earlier terms are seeds).
long recurrence_start(RecurrenceFamily family);

// ---------------------------------------------------------------------------
// Local series of the chirp e^{i(x0+ε)^n} about x0.

enum class LocalKind { quadratic, cubic_kappa, cubic_lambda, quartic_eta };

struct LocalExpansionCoeffs {
  LocalKind kind = LocalKind::quadratic;
  std::vector<BigRational> values;
};

LocalExpansionCoeffs local_coefficients(LocalKind kind, int count);

/// dε/dy as a power series in y through order T, where
/// y = ε + ... is the normalized local phase so that
/// e^{i(x0+ε)^n} = e^{i x0^n} e^{i n x0^{n-1} y}.
ComplexSeries local_expansion(int n, double x0, int order);

}  // namespace oscint
