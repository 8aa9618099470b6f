#include "oscint/general/reduce.hpp"

#include <stdexcept>

namespace oscint {

void ProblemSpec::validate() const {
  if (!phi.degree() || *phi.degree() < 1) throw std::invalid_argument("phase polynomial must have degree >= 1");
  if (p.is_zero()) throw std::invalid_argument("amplitude polynomial must not be identically zero");
  if (!(u >= 0.0)) throw std::invalid_argument("upper limit must be non-negative");
}

bool Subproblem::is_power() const {
  return spec.p.is_monomial() && spec.p.coeff(*spec.p.degree()) == 1.0 && spec.phi.is_monomial();
}

Complex ReducedProblem::assemble(const std::vector<Complex>& values) const {
  if (values.size() != subproblems.size()) throw std::invalid_argument("one value per subproblem expected");
  Complex acc = boundary_terms;
  for (std::size_t k = 0; k < values.size(); ++k) acc += subproblems[k].weight * values[k];
  return prefactor * acc;
}

namespace {

constexpr Complex kI{0.0, 1.0};

void split_into_powers(const Polynomial& p, const Polynomial& phi, double lower, double u, Complex weight,
                       ReducedProblem& out) {
  const auto c = p.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0.0) continue;
    out.subproblems.push_back({{Polynomial::monomial(1.0, m), phi, u}, weight * c[m], lower});
  }
}

// Appends weight · ∫₀ᵘ p e^{iφ} to out, with φ(0) = 0.
void reduce_into(const Polynomial& p, const Polynomial& phi, double u, Complex weight, bool infinite,
                 ReducedProblem& out) {
  if (p.is_zero()) return;
  const std::size_t l = *phi.degree();

  // odd part of p against an even phase: y = x²
  if (l >= 2 && phi.only_even_powers()) {
    std::vector<double> odd, even;
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto& target = k % 2 == 1 ? odd : even;
      if (target.size() <= k / 2) target.resize(k / 2 + 1, 0.0);
      target[k / 2] = p.coeff(k);
    }
    const Polynomial p_odd(odd);
    if (!p_odd.is_zero()) {
      std::vector<double> half_phi;
      for (std::size_t k = 0; k < phi.size(); k += 2) half_phi.push_back(phi.coeff(k));
      ++out.transformations;
      reduce_into(p_odd, Polynomial(half_phi), infinite ? u : u * u, weight * 0.5, infinite, out);
      // what is left of p is even
      std::vector<double> rest(p.size(), 0.0);
      for (std::size_t k = 0; k < p.size(); k += 2) rest[k] = p.coeff(k);
      reduce_into(Polynomial(rest), phi, u, weight, infinite, out);
      return;
    }
  }

  // deg p ≥ deg φ′: p = p̄φ′ + r, ∫p̄φ′e^{iφ} = −i[p̄e^{iφ}]₀ᵘ + i∫p̄′e^{iφ}
  const Polynomial dphi = phi.derivative();
  if (*p.degree() >= *dphi.degree()) {
    auto [quot, rem] = divmod(p, dphi);
    ++out.transformations;
    const Complex upper = infinite ? Complex{0.0, 0.0} : quot(u) * std::polar(1.0, phi(u));
    out.boundary_terms += weight * (-kI) * (upper - quot.coeff(0));
    out.boundary_magnitude += std::abs(weight) * (std::abs(upper) + std::abs(quot.coeff(0)));
    reduce_into(rem, phi, u, weight, infinite, out);
    reduce_into(quot.derivative(), phi, u, weight * kI, infinite, out);
    return;
  }

  if (phi.is_monomial()) {
    split_into_powers(p, phi, 0.0, u, weight, out);
    return;
  }

  if (l == 2) {
    // α₂x² + α₁x = α₂(x+s)² − α₂s²; p is constant here since deg p < deg φ′ = 1
    const double a1 = phi.coeff(1), a2 = phi.coeff(2);
    const double s = a1 / (2.0 * a2);
    ++out.transformations;
    const Complex shift_phase = std::polar(1.0, -a2 * s * s);
    const Polynomial square = Polynomial::monomial(a2, 2);
    split_into_powers(p.shifted(-s), square, s, infinite ? u : u + s, weight * shift_phase, out);
    return;
  }

  out.subproblems.push_back({{p, phi, u}, weight, 0.0});
}

}  // namespace

ReducedProblem reduce(const ProblemSpec& spec) {
  spec.validate();
  ReducedProblem out;
  out.prefactor = std::polar(1.0, spec.phi.coeff(0));
  std::vector<double> shifted(spec.phi.coeffs().begin(), spec.phi.coeffs().end());
  shifted[0] = 0.0;
  reduce_into(spec.p, Polynomial(shifted), spec.u, {1.0, 0.0}, spec.infinite(), out);
  return out;
}

}  // namespace oscint
