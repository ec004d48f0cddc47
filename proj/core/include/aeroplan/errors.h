#ifndef AEROPLAN_ERRORS_H
#define AEROPLAN_ERRORS_H

#include <stdexcept>
#include <string>

namespace aeroplan {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive oracle refused because the instance is too large.
class OracleScaleExceeded : public InputError {
 public:
  explicit OracleScaleExceeded(const std::string& what)
      : InputError("oracle scale exceeded: " + what) {}
};

}  // namespace aeroplan

#endif
