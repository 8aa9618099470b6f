#include "oscint/general/complete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscint/core/errors.hpp"
#include "oscint/general/laurent.hpp"
#include "oscint/general/q_series.hpp"
#include "oscint/power/special_functions.hpp"

namespace oscint {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

CompleteIntegral complete_general(const Polynomial& p, const Polynomial& phi, int J, double tol) {
  if (!phi.degree() || *phi.degree() < 2) throw std::invalid_argument("complete integral needs deg phi >= 2");
  if (p.is_zero()) return {};
  if (J < 1) throw std::invalid_argument("complete integral needs J >= 1");
  const int l = static_cast<int>(*phi.degree());
  const double al = phi.coeff(static_cast<std::size_t>(l));

  // E = exp(g), g = iΣ_{1≤j<l} α_j x^j, through x^{J−1}: n E_n = Σ k g_k E_{n−k}
  std::vector<Complex> g(static_cast<std::size_t>(l), Complex{0.0, 0.0});
  for (int j = 1; j < l; ++j) g[j] = Complex{0.0, phi.coeff(static_cast<std::size_t>(j))};
  std::vector<Complex> E(static_cast<std::size_t>(J), Complex{0.0, 0.0});
  E[0] = 1.0;
  for (int n = 1; n < J; ++n) {
    Complex acc{0.0, 0.0};
    for (int k = 1; k <= std::min(n, l - 1); ++k) acc += static_cast<double>(k) * g[k] * E[n - k];
    E[n] = acc / static_cast<double>(n);
  }

  // (i/α_l)^a Γ(a) = exp(lgamma(a) − a log|α_l|) e^{i a θ}, θ = ±π/2
  const double theta = al > 0.0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
  const double log_scale = std::log(std::abs(al));
  Complex sum{0.0, 0.0};
  double magnitude = 0.0;
  std::vector<double> recent;
  CompleteIntegral out;
  bool settled = false;
  for (int j = 0; j < J; ++j) {
    Complex t{0.0, 0.0};
    for (std::size_t k = 0; k < p.size() && static_cast<int>(k) <= j; ++k) t += p.coeff(k) * E[j - k];
    const double a = (1.0 + j) / l;
    const Complex term = t * std::polar(std::exp(log_gamma(a) - a * log_scale), a * theta);
    sum += term;
    magnitude += std::abs(term);
    recent.push_back(std::abs(term));
    out.terms_used = j + 1;
    // zero coefficients come in runs up to l−1 long; wait for l small ones
    if (j >= l) {
      const double tail = *std::max_element(recent.end() - l, recent.end());
      if (tail <= 0.25 * kEps * std::abs(sum)) {
        settled = true;
        break;
      }
    }
  }
  const double last = *std::max_element(recent.end() - std::min<int>(l, static_cast<int>(recent.size())), recent.end());
  const double scale = 1.0 / l;
  out.value = std::polar(1.0, phi.coeff(0)) * sum * scale;
  out.tail_estimate = settled ? 0.0 : last * scale;
  out.rounding_estimate = kEps * magnitude * scale;
  if (out.tail_estimate > tol * std::max(1.0, std::abs(out.value))) {
    throw NumericalError("complete integral: " + std::to_string(J) + " Taylor terms leave a tail of " +
                         std::to_string(out.tail_estimate) + "; raise J");
  }
  return out;
}

MatchResult match_infinity(const Polynomial& p, const Polynomial& phi, int K, int T, const MatchWindow& window) {
  if (!(window.lo > 0.0 && window.hi > window.lo && window.points >= 2)) throw std::invalid_argument("bad matching window");
  if (T < 1) throw std::invalid_argument("matching needs at least one asymptotic term");
  const int l = static_cast<int>(phi.degree().value_or(0));
  if (l < 2 || static_cast<int>(p.degree().value_or(0)) >= l - 1) {
    throw std::invalid_argument("matching needs deg phi >= 2 and deg p < deg phi - 1");
  }

  // indices of the first T+1 nonzero Laurent coefficients
  std::vector<Complex> h;
  std::vector<int> nonzero;
  for (int order = 4 * (T + 1) * l;; order *= 2) {
    const auto support = laurent_support(p, phi, order);
    nonzero.clear();
    for (int t = 1; t <= order && static_cast<int>(nonzero.size()) <= T; ++t) {
      if (support[static_cast<std::size_t>(t)]) nonzero.push_back(t);
    }
    if (static_cast<int>(nonzero.size()) > T) {
      h = laurent_h(to_complex(p), to_complex(phi), nonzero.back());
      break;
    }
    if (order > 4096) throw NumericalError("asymptotic series has too few nonzero terms");
  }

  Polynomial phase0 = phi;
  {
    std::vector<double> c(phi.coeffs().begin(), phi.coeffs().end());
    c[0] = 0.0;
    phase0 = Polynomial(c);
  }
  const QSeries q = q_iterate(p, phase0, K);

  struct Point {
    double x;
    Complex value;
    double indicator;
    bool usable;
  };
  std::vector<Point> grid;
  const double ratio = std::pow(window.hi / window.lo, 1.0 / (window.points - 1));
  for (int k = 0; k < window.points; ++k) {
    const double x = window.lo * std::pow(ratio, k);
    const QEvaluation qe = q.evaluate(x);
    Complex asym{0.0, 0.0};
    for (int idx = 0; idx < T; ++idx) asym += h[nonzero[idx]] * std::pow(x, -nonzero[idx]);
    const double omitted = std::abs(h[nonzero[T]]) * std::pow(x, -nonzero[T]);
    const Complex value = std::polar(1.0, phi(x)) * (qe.sum - asym);
    grid.push_back({x, value, qe.error() + omitted, !qe.diverging});
  }

  auto best = grid.end();
  for (auto it = grid.begin(); it != grid.end(); ++it) {
    if (it->usable && (best == grid.end() || it->indicator < best->indicator)) best = it;
  }
  if (best == grid.end()) throw NumericalError("no grid point in the matching window has a settled q series");

  MatchResult out;
  out.x = best->x;
  out.indicator = best->indicator;
  out.estimate.value = best->value;
  out.estimate.terms_used = K + 1;
  // spread over points whose indicator is within a decade of the best
  double spread = 0.0;
  for (const auto& pt : grid) {
    if (!pt.usable || pt.indicator > 10.0 * best->indicator) continue;
    ++out.usable_points;
    spread = std::max(spread, std::abs(pt.value - best->value));
  }
  out.estimate.tail_estimate = std::max(spread, best->indicator);
  return out;
}

}  // namespace oscint
