#include "oscint/reversion/reversion.hpp"

namespace oscint {

ReversionResult revert_multinomial(const Poly<BigRational>& alpha, int order) {
  return {revert_series_multinomial(alpha, order), ReversionMethod::multinomial, alpha};
}

ReversionResult revert_perturbative(const Poly<BigRational>& alpha, int order, int max_iter) {
  return {revert_series_perturbative(alpha, order, max_iter), ReversionMethod::perturbative, alpha};
}

PowerSeries<Complex> revert_numeric(const Polynomial& alpha, int order, ReversionMethod method) {
  const auto lifted = alpha.map<Complex>([](double v) { return Complex{v, 0.0}; });
  if (method == ReversionMethod::multinomial) return revert_series_multinomial(lifted, order);
  return revert_series_perturbative(lifted, order, 4 * order + 16);
}

}  // namespace oscint
