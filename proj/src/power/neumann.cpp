#include "oscint/power/neumann.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oscint/core/errors.hpp"
#include "oscint/power/special_functions.hpp"

namespace oscint {

namespace {

constexpr int kCachedTerms = 40;

// Rising factorial (x)_k.
BigRational pochhammer(const BigRational& x, long k) {
  BigRational r(1);
  for (long i = 0; i < k; ++i) r *= x + BigRational(i);
  return r;
}

BigRational factorial(long k) {
  BigRational r(1);
  for (long i = 2; i <= k; ++i) r *= BigRational(i);
  return r;
}

// Taylor coefficient of z^{ν+2l} in ∫₀^{z^{1/n}} sin(x^n) dx.
BigRational taylor_b(int n, long l) {
  BigRational b = BigRational(1) / (factorial(2 * l + 1) * BigRational(2 * n * l + n + 1));
  return l % 2 == 0 ? b : -b;
}

// Normalizer that separates ξ from d_n; d_n = 2^{1/n} Γ(1+1/n) · norm.
BigRational normalizer(int n) {
  switch (n) {
    case 2: return BigRational(1);
    case 3: return BigRational(9, 2);
    case 4: return BigRational(4);
    case 5: return BigRational(5);
    default: throw std::invalid_argument("Neumann expansion is tabulated for n = 2..5");
  }
}

// Coefficient of J_{ν+2s}, stripped of the common factor 2^{1/n}Γ(1+1/n):
//   (ν+2s) Σ_m 2^{1+2s-2m} (ν)_{2s-m} / m! · b_{2s-2m}
BigRational xi_term(int n, long s) {
  const BigRational nu = BigRational(1) + BigRational(1, n);
  BigRational sum(0);
  for (long m = 0; m <= s; ++m) {
    sum += BigRational(2).pow(static_cast<int>(1 + 2 * s - 2 * m)) * pochhammer(nu, 2 * s - m) / factorial(m) *
           taylor_b(n, s - m);
  }
  return (nu + BigRational(2 * s)) * sum / normalizer(n);
}

std::vector<BigRational> compute_xi(int n, int count) {
  std::vector<BigRational> xi;
  xi.reserve(static_cast<std::size_t>(count));
  for (long s = 0; s < count; ++s) xi.push_back(xi_term(n, s));
  return xi;
}

const std::vector<BigRational>& cached_xi(int n) {
  static const std::array<std::vector<BigRational>, 4> table{
      compute_xi(2, kCachedTerms), compute_xi(3, kCachedTerms), compute_xi(4, kCachedTerms),
      compute_xi(5, kCachedTerms)};
  return table[static_cast<std::size_t>(n - 2)];
}

}  // namespace

double neumann_prefactor(int n) {
  const double pi = std::numbers::pi;
  switch (n) {
    case 2: return std::sqrt(2.0 * pi) / 2.0;
    case 3: return std::cbrt(2.0) * pi * std::sqrt(3.0) / gamma_fn(2.0 / 3.0);
    case 4: return std::pow(2.0, 0.75) * pi / gamma_fn(0.75);
    case 5: return std::pow(2.0, 0.2) * pi / (std::sin(pi / 5.0) * gamma_fn(0.8));
    default: throw std::invalid_argument("Neumann expansion is tabulated for n = 2..5");
  }
}

double neumann_tail_limit(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return 2.0 / n * gamma_fn(1.0 / n) * std::sin(std::numbers::pi / (2.0 * n));
}

NeumannExpansion neumann_coeffs(int n, int S) {
  if (S < 0) throw std::invalid_argument("Neumann term index must be non-negative");
  NeumannExpansion out;
  out.n = n;
  out.d_n = neumann_prefactor(n);
  out.nu = BigRational(1) + BigRational(1, n);
  const int count = S + 1;
  if (count <= kCachedTerms) {
    const auto& xi = cached_xi(n);
    out.xi.assign(xi.begin(), xi.begin() + count);
  } else {
    out.xi = compute_xi(n, count);
  }
  return out;
}

double neumann_eval(const NeumannExpansion& exp, double u, double tol) {
  if (u < 0.0) throw std::invalid_argument("neumann_eval needs u >= 0");
  if (exp.xi.empty()) throw std::invalid_argument("empty Neumann expansion");
  if (u == 0.0) return 0.0;
  const double z = std::pow(u, exp.n);
  const double nu = exp.nu.to_double();
  double sum = 0.0;
  double rounding = 0.0;
  double last = 0.0;
  for (std::size_t s = 0; s < exp.xi.size(); ++s) {
    const BesselValue j = bessel_j(nu + 2.0 * static_cast<double>(s), z);
    const double w = exp.d_n * exp.xi[s].to_double();
    last = w * j.value;
    sum += last;
    rounding += std::abs(w) * j.error;
  }
  // J_{ν+2s}(z) falls off like (z/2)^2/(s^2) per step once 2s > z; the next
  // term is bounded by the last one times that ratio.
  const double next_order = nu + 2.0 * static_cast<double>(exp.xi.size());
  const double ratio = z * z / (4.0 * next_order * (next_order - 1.0));
  const double tail = ratio < 1.0 ? std::abs(last) * ratio / (1.0 - ratio) : std::abs(last) + 1.0;
  if (tail + rounding > tol * std::max(1.0, std::abs(sum))) {
    throw NumericalError("Neumann series with " + std::to_string(exp.xi.size()) + " terms cannot reach tolerance at u = " +
                         std::to_string(u));
  }
  return sum;
}

}  // namespace oscint
