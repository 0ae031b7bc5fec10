#pragma once

#include <stdexcept>
#include <string>

namespace numgk {

/// Malformed text input (token, word, surface spec, matrix literal).
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A generator was applied to a model kind it does not act on.
struct IncompatibleError : std::invalid_argument {
  explicit IncompatibleError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace numgk
