#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oscint/core/field.hpp"
#include "oscint/general/evaluate.hpp"
#include "oscint/general/problem.hpp"

namespace oscint::cli {

/// Runs the oscint command line on args (program name excluded).
/// Exit codes: 0 success, 1 usage or invalid input, 2 numerical failure or
/// a reference-table deviation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re +imi" with 17 significant digits per part; exact zero prints "0".
std::string format_complex(Complex v);

enum class Part { real, imag, abs };
Part part_from_string(const std::string& name);
double take_part(Complex v, Part part);

struct Extremum {
  double u = 0.0;
  double value = 0.0;
  bool maximum = false;
};

/// Local extrema of part(I(u)) on (0, u_max], located on a uniform sample
/// grid and refined by golden-section search on evaluate.
std::vector<Extremum> curve_extrema(const Polynomial& p, const Polynomial& phi, double u_max, int samples, Part part,
                                    const EvalConfig& cfg = {});

/// Worker count for row-parallel commands, from OSCINT_THREADS.
unsigned thread_count();

}  // namespace oscint::cli
