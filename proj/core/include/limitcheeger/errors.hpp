#pragma once

#include <stdexcept>
#include <string>

namespace limitcheeger {

// Bad user input: malformed files, values outside [0,1], unknown flags.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A ratio was requested on a cut or fractional partition whose
// denominator vanishes. Carries the name of the offending side.
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was asked to exceed a hard size cap (matrix size,
// enumeration bound without a sanctioned fallback).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace limitcheeger
