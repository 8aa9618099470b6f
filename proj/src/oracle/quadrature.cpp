#include "oscint/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscint/core/errors.hpp"

namespace oscint {

namespace {

constexpr int kMaxInitialIntervals = 10000;
constexpr int kCriticalSamples = 4000;

// Kronrod nodes on [0, 1] half of [-1, 1]; odd entries are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

template <class F>
Interval gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

double bisect_root(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> breakpoints(const Polynomial& phi, double u) {
  std::vector<double> pts{0.0};
  const Polynomial dphi = phi.derivative();
  auto dg = [&](double x) { return dphi(x); };
  // zeros of φ′ by sign changes on a fine grid
  double prev_x = 0.0, prev_v = dg(0.0);
  for (int k = 1; k <= kCriticalSamples; ++k) {
    const double x = u * k / kCriticalSamples;
    const double v = dg(x);
    if (v == 0.0) {
      pts.push_back(x);
    } else if ((v < 0.0) != (prev_v < 0.0) && prev_v != 0.0) {
      pts.push_back(bisect_root(dg, prev_x, x));
    }
    prev_x = x;
    prev_v = v;
  }
  pts.push_back(u);

  // φ = kπ crossings inside each monotone piece
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    out.push_back(a);
    const double fa = phi(a), fb = phi(b);
    const double lo = std::min(fa, fb), hi = std::max(fa, fb);
    const long kmin = static_cast<long>(std::floor(lo / std::numbers::pi)) + 1;
    const long kmax = static_cast<long>(std::ceil(hi / std::numbers::pi)) - 1;
    if (kmax - kmin + static_cast<long>(out.size()) > kMaxInitialIntervals) {
      throw NumericalError("oracle refuses: phase sweeps more than " + std::to_string(kMaxInitialIntervals) +
                           " half-periods on [0, " + std::to_string(u) + "]");
    }
    std::vector<double> crossings;
    for (long k = kmin; k <= kmax; ++k) {
      const double target = k * std::numbers::pi;
      crossings.push_back(bisect_root([&](double x) { return phi(x) - target; }, a, b));
    }
    std::sort(crossings.begin(), crossings.end());
    for (double x : crossings)
      if (x > out.back() && x < b) out.push_back(x);
  }
  out.push_back(u);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OracleResult oracle_integrate(const ProblemSpec& spec, double tol, int max_subdiv) {
  if (spec.infinite() || !(spec.u >= 0.0)) throw std::invalid_argument("oracle needs a finite u >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("oracle tolerance must be positive");
  OracleResult out;
  if (spec.u == 0.0) {
    out.converged = true;
    return out;
  }
  const auto f = [&](double x) { return spec.p(x) * std::polar(1.0, spec.phi(x)); };

  const std::vector<double> pts = breakpoints(spec.phi, spec.u);
  std::priority_queue<Interval> heap;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) heap.push(gauss_kronrod(f, pts[i], pts[i + 1]));

  while (heap.top().error > tol / static_cast<double>(heap.size())) {
    if (out.subdivisions >= max_subdiv) break;
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push(gauss_kronrod(f, worst.a, mid));
    heap.push(gauss_kronrod(f, mid, worst.b));
    ++out.subdivisions;
  }
  out.converged = heap.top().error <= tol / static_cast<double>(heap.size());

  // left to right, so the result does not depend on heap order
  std::vector<Interval> all;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  for (const auto& iv : all) {
    out.value += iv.value;
    out.abs_error += iv.error;
  }
  return out;
}

}  // namespace oscint
