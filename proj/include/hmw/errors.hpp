#pragma once

#include <stdexcept>
#include <string>

namespace hmw {

/// A path or evaluation point came within the singularity radius of the
/// filament. Never regularized: topological quantities would be corrupted.
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scenario configuration or parameter set. The message names the
/// offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hmw
