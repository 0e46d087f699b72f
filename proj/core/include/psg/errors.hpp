#pragma once

#include <stdexcept>
#include <string>

namespace psg {

/// Non-finite oracle output, weight overflow and similar failures that end
/// a run. Precondition violations throw std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psg
