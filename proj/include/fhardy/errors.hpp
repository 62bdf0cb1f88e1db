#pragma once

#include <stdexcept>
#include <string>

namespace fhardy {

enum class ErrorKind {
  dimension_out_of_range,
  exponent_out_of_range,
  smoothness_out_of_range,
  critical_case,
  invalid_argument,
  non_convergence,
  inadmissible_function,
  config_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_out_of_range: return "DimensionOutOfRange";
    case ErrorKind::exponent_out_of_range: return "ExponentOutOfRange";
    case ErrorKind::smoothness_out_of_range: return "SmoothnessOutOfRange";
    case ErrorKind::critical_case: return "CriticalCase";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::non_convergence: return "NonConvergence";
    case ErrorKind::inadmissible_function: return "InadmissibleFunction";
    case ErrorKind::config_error: return "ConfigError";
  }
  return "Unknown";
}

/// Base class of every error raised by the library. The kind is stable and
/// is what callers (and the command-line front end) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when an argument lies outside the domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class InadmissibleFunction : public Error {
 public:
  explicit InadmissibleFunction(const std::string& what)
      : Error(ErrorKind::inadmissible_function, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config_error, what) {}
};

}  // namespace fhardy
