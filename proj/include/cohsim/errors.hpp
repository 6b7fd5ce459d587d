#pragma once

#include <stdexcept>
#include <string>

namespace cohsim {

/// Invalid user-facing input: bad config values, malformed documents,
/// unsupported state/scenario combinations. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Runtime numerical failure: NaN/overflow during propagation, singular
/// overlap matrices, failed I/O of results. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cohsim
