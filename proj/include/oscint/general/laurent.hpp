#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "oscint/core/poly.hpp"
#include "oscint/core/series.hpp"

namespace oscint {

/// Coefficients h_1..h_T (index 0 unused, zero) of the solution
/// q ~ Σ h_t x^{−t} of x^m = i q φ′ + q′ at large x, from
///   i l α_l h_t = δ_{t−l+1,−m} + (t−l) h_{t−l} − i Σ_{j=1}^{l−1} j α_j h_{t−l+j},
/// with h_t = 0 for t ≤ 0. Requires m < l−1.
template <ComplexField C>
std::vector<C> laurent_h(int m, const Poly<C>& phi, int T) {
  using Traits = FieldTraits<C>;
  if (!phi.degree() || *phi.degree() < 2) throw std::invalid_argument("asymptotic series needs deg phi >= 2");
  const int l = static_cast<int>(*phi.degree());
  if (m < 0 || m >= l - 1) throw std::invalid_argument("asymptotic series needs 0 <= m < deg phi - 1");
  if (T < 0) throw std::invalid_argument("Laurent order must be non-negative");
  const C i = Traits::imag_unit();
  const C lead = i * Traits::from_int(l) * phi.coeff(static_cast<std::size_t>(l));
  std::vector<C> h(static_cast<std::size_t>(T) + 1, Traits::zero());
  auto at = [&](int t) { return t <= 0 ? Traits::zero() : h[static_cast<std::size_t>(t)]; };
  for (int t = 1; t <= T; ++t) {
    C rhs = t - l + 1 == -m ? Traits::one() : Traits::zero();
    rhs = rhs + Traits::from_int(t - l) * at(t - l);
    C sum = Traits::zero();
    for (int j = 1; j < l; ++j) {
      const C aj = phi.coeff(static_cast<std::size_t>(j));
      if (is_zero(aj)) continue;
      sum = sum + Traits::from_int(j) * aj * at(t - l + j);
    }
    h[static_cast<std::size_t>(t)] = (rhs - i * sum) / lead;
  }
  return h;
}

/// Linear combination of laurent_h over the monomials of p (deg p < l−1).
template <ComplexField C>
std::vector<C> laurent_h(const Poly<C>& p, const Poly<C>& phi, int T) {
  std::vector<C> h(static_cast<std::size_t>(T) + 1, FieldTraits<C>::zero());
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (is_zero(p.coeff(m))) continue;
    const auto hm = laurent_h(static_cast<int>(m), phi, T);
    for (std::size_t t = 0; t < h.size(); ++t) h[t] = h[t] + p.coeff(m) * hm[t];
  }
  return h;
}

/// Which h_1..h_T can be nonzero, following the recurrence's dependency
/// pattern rather than the computed values (which grow factorially and
/// defeat any relative zero test).
template <Field C>
std::vector<bool> laurent_support(const Poly<C>& p, const Poly<C>& phi, int T) {
  const int l = static_cast<int>(*phi.degree());
  std::vector<bool> nz(static_cast<std::size_t>(T) + 1, false);
  auto at = [&](int t) { return t > 0 && nz[static_cast<std::size_t>(t)]; };
  for (int t = 1; t <= T; ++t) {
    const int m = l - 1 - t;
    bool v = m >= 0 && !is_zero(p.coeff(static_cast<std::size_t>(m)));
    v = v || (t != l && at(t - l));
    for (int j = 1; j < l && !v; ++j) v = !is_zero(phi.coeff(static_cast<std::size_t>(j))) && at(t - l + j);
    nz[static_cast<std::size_t>(t)] = v;
  }
  return nz;
}

/// Coefficients of x^{e} in p − i q φ′ − q′ for q = Σ_{t≤T} h_t x^{−t},
/// returned as (e, coefficient) for every e whose coefficient is fully
/// determined by h_1..h_T, that is e ≥ l − 1 − T.
template <ComplexField C>
std::vector<std::pair<int, C>> laurent_residual(const std::vector<C>& h, const Poly<C>& p, const Poly<C>& phi) {
  using Traits = FieldTraits<C>;
  const int l = static_cast<int>(*phi.degree());
  const int T = static_cast<int>(h.size()) - 1;
  const Poly<C> dphi = phi.derivative();
  const C i = Traits::imag_unit();
  auto at = [&](int t) { return t <= 0 || t > T ? Traits::zero() : h[static_cast<std::size_t>(t)]; };
  std::vector<std::pair<int, C>> out;
  const int top = std::max(static_cast<int>(p.degree().value_or(0)), l - 2);
  for (int e = top; e >= l - 1 - T; --e) {
    C v = e >= 0 ? p.coeff(static_cast<std::size_t>(e)) : Traits::zero();
    // i q φ′: h_t x^{−t} · jα_j x^{j−1} lands on e = j − 1 − t
    for (int j = 1; j <= l; ++j) v = v - i * dphi.coeff(static_cast<std::size_t>(j - 1)) * at(j - 1 - e);
    // q′: −t h_t x^{−t−1} lands on e = −t − 1
    v = v + Traits::from_int(-e - 1) * at(-e - 1);
    out.emplace_back(e, v);
  }
  return out;
}

struct AsymptoticSeries {
  ComplexSeries h;  ///< in the inverse variable
  int T = 0;
  Polynomial phi;
  int m = 0;
};

AsymptoticSeries laurent_coeffs(int m, const Polynomial& phi, int T);

}  // namespace oscint
