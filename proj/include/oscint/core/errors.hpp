#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

/// Raised when a series, continued fraction or iteration fails to reach
/// the requested accuracy within its budget, or produces a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscint
