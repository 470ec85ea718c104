#pragma once

// Error taxonomy mirrored by the CLI exit codes: std::invalid_argument is
// an input error (exit 2), math_check_error a failed mathematical check
// (exit 1), resource_limit_error a desk-scale guard (exit 3).

#include <stdexcept>
#include <string>

namespace assoc {

/// A construction or check failed mathematically (e.g. unsuitable cluster
/// parameters) even though the input was well-formed.
struct math_check_error : std::runtime_error {
  explicit math_check_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration guard tripped; the instance is too large for the
/// brute-force strategy in use.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace assoc
