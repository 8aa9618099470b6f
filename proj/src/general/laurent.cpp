#include "oscint/general/laurent.hpp"

#include "oscint/general/q_series.hpp"

namespace oscint {

AsymptoticSeries laurent_coeffs(int m, const Polynomial& phi, int T) {
  auto h = laurent_h(m, to_complex(phi), T);
  return {ComplexSeries(PowerSeries<Complex>(std::move(h), T), VariableKind::power_of_inverse_x), T, phi, m};
}

}  // namespace oscint
