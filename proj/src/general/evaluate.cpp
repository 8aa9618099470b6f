#include "oscint/general/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "oscint/core/errors.hpp"
#include "oscint/general/complete.hpp"
#include "oscint/general/laurent.hpp"
#include "oscint/general/q_series.hpp"
#include "oscint/general/reduce.hpp"
#include "oscint/power/power_kernel.hpp"

namespace oscint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LeafValue {
  Complex value{0.0, 0.0};
  double error = 0.0;
  Method method = Method::taylor_q;
};

Method method_of(PowerRoute route) {
  switch (route) {
    case PowerRoute::taylor: return Method::taylor_q;
    case PowerRoute::gamma_cf: return Method::asymptotic_match;
    case PowerRoute::closed_form: return Method::complete_closed_form;
  }
  return Method::taylor_q;
}

// ∫₀ᵗ x^m e^{icx^n} dx for any real t (or +inf); negative t mirrors onto
// the positive axis.
PowerValue signed_power(int m, int n, double c, double t) {
  if (t >= 0.0) return power_integral({m, n, c}, t);
  const double mirrored_c = n % 2 == 0 ? c : -c;
  PowerValue v = power_integral({m, n, mirrored_c}, -t);
  if (m % 2 == 0) v.value = -v.value;
  return v;
}

LeafValue power_leaf(const Subproblem& s, EvalDiagnostics& d) {
  const int m = static_cast<int>(*s.spec.p.degree());
  const int n = static_cast<int>(*s.spec.phi.degree());
  const double c = s.spec.phi.coeff(static_cast<std::size_t>(n));
  const PowerValue hi = signed_power(m, n, c, s.spec.u);
  auto count = [&](const PowerValue& v) {
    if (v.route == PowerRoute::taylor) ++d.power_taylor;
    if (v.route == PowerRoute::gamma_cf) ++d.power_gamma;
  };
  count(hi);
  if (s.lower == 0.0) return {hi.value, hi.error, method_of(hi.route)};
  const PowerValue lo = signed_power(m, n, c, s.lower);
  count(lo);
  return {hi.value - lo.value, hi.error + lo.error, Method::reduced_composite};
}

Polynomial without_constant(Polynomial phi) {
  std::vector<double> c(phi.coeffs().begin(), phi.coeffs().end());
  if (!c.empty()) c[0] = 0.0;
  return Polynomial(std::move(c));
}

// Largest h ≤ limit with Σ_{j≥1} |φ̃_j| h^j ≤ budget.
double segment_length(const Polynomial& phi_shifted, double limit, double budget) {
  auto weight = [&](double h) {
    double acc = 0.0;
    for (std::size_t j = phi_shifted.size(); j-- > 1;) acc = (acc + std::abs(phi_shifted.coeff(j))) * h;
    return acc;
  };
  if (weight(limit) <= budget) return limit;
  double lo = 0.0, hi = limit;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (weight(mid) <= budget ? lo : hi) = mid;
  }
  return lo;
}

LeafValue general_leaf(const Polynomial& p, const Polynomial& phi, double u, const EvalConfig& cfg,
                       EvalDiagnostics& d) {
  if (std::isinf(u)) {
    const CompleteIntegral ci = complete_general(p, phi, cfg.J, cfg.tol);
    d.complete_terms += ci.terms_used;
    return {ci.value, ci.error(), Method::complete_closed_form};
  }
  auto good_enough = [&](double err, Complex value) { return err <= cfg.tol * std::max(1.0, std::abs(value)); };

  // origin-anchored series in one piece
  const QSeries q = q_iterate(p, phi, cfg.K);
  const QEvaluation qe = q.evaluate(u);
  const Complex q_value = std::polar(1.0, phi(u)) * qe.sum;
  if (!qe.diverging && good_enough(qe.error(), q_value)) {
    d.q_terms += qe.terms;
    d.segments += 1;
    return {q_value, qe.error(), Method::taylor_q};
  }

  // infinity-anchored: I(∞) + e^{iφ(u)} Σ h_j u^{−j}, cut at the smallest term
  try {
    const CompleteIntegral ci = complete_general(p, phi, cfg.J, cfg.tol);
    // a lone small term can come from cancellation, so judge each cut by
    // the largest of the next l supported terms
    const int l = static_cast<int>(*phi.degree());
    const int top = cfg.T + l - 1;
    const auto h = laurent_h(to_complex(p), to_complex(phi), top);
    const auto support = laurent_support(p, phi, top);
    auto term = [&](int t) { return support[static_cast<std::size_t>(t)] ? std::abs(h[t]) * std::pow(u, -t) : 0.0; };
    int cut = -1;
    double smallest = std::numeric_limits<double>::infinity();
    for (int t = 1; t <= cfg.T; ++t) {
      double window = 0.0;
      for (int k = t; k < t + l; ++k) window = std::max(window, term(k));
      if (window < smallest) {
        smallest = window;
        cut = t;
      }
    }
    if (cut > 0) {
      Complex tail{0.0, 0.0};
      for (int t = 1; t < cut; ++t) tail += h[t] * std::pow(u, -t);
      const Complex value = ci.value + std::polar(1.0, phi(u)) * tail;
      const double err = smallest + ci.error();
      if (good_enough(err, value)) {
        d.complete_terms += ci.terms_used;
        d.laurent_terms += cut - 1;
        return {value, err, Method::asymptotic_match};
      }
    }
  } catch (const NumericalError&) {
    // fall through to the segmented series
  }

  // origin-anchored series restarted on short pieces
  Complex total{0.0, 0.0};
  double err = 0.0;
  double a = 0.0;
  int segments = 0;
  int terms = 0;
  while (a < u) {
    if (++segments > cfg.max_segments) {
      throw NumericalError("no route converges at u = " + std::to_string(u) + ": single q series error " +
                           std::to_string(qe.error()) + (qe.diverging ? " (diverging)" : "") + ", more than " +
                           std::to_string(cfg.max_segments) + " q segments needed");
    }
    const Polynomial phi_a = without_constant(phi.shifted(a));
    double h = segment_length(phi_a, u - a, cfg.step_phase);
    const bool last = h >= u - a;
    if (h <= 0.0) throw NumericalError("q segment length underflow at x = " + std::to_string(a));
    const QSeries qs = q_iterate(p.shifted(a), phi_a, cfg.K);
    const QEvaluation se = qs.evaluate(h);
    const double b = last ? u : a + h;
    total += std::polar(1.0, phi(b)) * se.sum;
    err += se.error();
    terms += se.terms;
    a = b;
  }
  err += kEps * segments * std::abs(total);
  if (!good_enough(err, total)) {
    throw NumericalError("segmented q series reaches only " + std::to_string(err) + " at u = " + std::to_string(u));
  }
  d.q_terms += terms;
  d.segments += segments;
  return {total, err, Method::taylor_q};
}

}  // namespace

void EvalConfig::validate() const {
  if (K < 1 || T < 1 || J < 1 || window_points < 2 || match_terms < 1 || max_segments < 1) {
    throw std::invalid_argument("evaluation parameters must be positive");
  }
  if (!(tol >= 1e-14)) throw std::invalid_argument("tol must be at least 1e-14");
  if (!(window_lo > 0.0 && window_hi > window_lo)) throw std::invalid_argument("matching window must satisfy 0 < lo < hi");
  if (!(step_phase > 0.0)) throw std::invalid_argument("step_phase must be positive");
}

void EvalConfig::set(const std::string& key, const std::string& value) {
  auto as_int = [&] {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("bad integer for " + key + ": " + value);
    return v;
  };
  auto as_double = [&] {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("bad number for " + key + ": " + value);
    return v;
  };
  try {
    if (key == "K") K = as_int();
    else if (key == "T") T = as_int();
    else if (key == "J") J = as_int();
    else if (key == "tol") tol = as_double();
    else if (key == "window_lo") window_lo = as_double();
    else if (key == "window_hi") window_hi = as_double();
    else if (key == "window_points") window_points = as_int();
    else if (key == "match_terms") match_terms = as_int();
    else if (key == "step_phase") step_phase = as_double();
    else if (key == "max_segments") max_segments = as_int();
    else throw std::invalid_argument("unknown configuration key '" + key + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("value out of range for " + key + ": " + value);
  }
}

std::string to_string(Method method) {
  switch (method) {
    case Method::taylor_q: return "taylor_q";
    case Method::asymptotic_match: return "asymptotic_match";
    case Method::complete_closed_form: return "complete_closed_form";
    case Method::reduced_composite: return "reduced_composite";
  }
  return "unknown";
}

IntegralResult evaluate(const ProblemSpec& spec, const EvalConfig& cfg) {
  cfg.validate();
  spec.validate();
  if (spec.infinite() && *spec.phi.degree() < 2) {
    throw std::invalid_argument("the complete integral needs deg phi >= 2");
  }
  IntegralResult out;
  if (spec.u == 0.0) return out;

  const ReducedProblem reduced = reduce(spec);
  std::optional<NumericalError> failure;
  try {
    out.diagnostics.transformations = reduced.transformations;
    out.diagnostics.leaves = static_cast<int>(reduced.subproblems.size());
    std::vector<Complex> values;
    double err = 4.0 * kEps * reduced.boundary_magnitude;
    Method leaf_method = Method::reduced_composite;
    for (const auto& s : reduced.subproblems) {
      const LeafValue v = s.is_power() ? power_leaf(s, out.diagnostics)
                                       : general_leaf(s.spec.p, s.spec.phi, s.spec.u, cfg, out.diagnostics);
      values.push_back(v.value);
      err += std::abs(s.weight) * v.error + kEps * std::abs(s.weight * v.value);
      leaf_method = v.method;
    }
    out.value = reduced.assemble(values);
    out.error_estimate = err + kEps * std::abs(out.value);
    const bool plain = reduced.subproblems.size() == 1 && reduced.transformations == 0 &&
                       reduced.boundary_terms == Complex{0.0, 0.0};
    out.method = plain ? leaf_method : Method::reduced_composite;
  } catch (const NumericalError& e) {
    failure = e;
  }
  const bool accurate = !failure && out.error_estimate <= cfg.tol * std::max(1.0, std::abs(out.value));
  if (accurate || reduced.transformations == 0 || spec.infinite()) {
    if (failure) throw *failure;
    return out;
  }

  // the reduction cancelled too much (or a piece failed): try the problem whole
  try {
    EvalDiagnostics d;
    d.leaves = 1;
    const LeafValue whole = general_leaf(spec.p, without_constant(spec.phi), spec.u, cfg, d);
    if (failure || whole.error < out.error_estimate) {
      out.value = std::polar(1.0, spec.phi.coeff(0)) * whole.value;
      out.error_estimate = whole.error + kEps * std::abs(out.value);
      out.method = whole.method;
      out.diagnostics = d;
    }
  } catch (const NumericalError&) {
    if (failure) throw *failure;
  }
  return out;
}

}  // namespace oscint
