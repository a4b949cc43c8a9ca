#pragma once

#include <stdexcept>
#include <string>

namespace nsalpha {

struct NonZeroMeanError : std::runtime_error {
  explicit NonZeroMeanError(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivergenceFreeError : std::runtime_error {
  explicit NotDivergenceFreeError(const std::string& what) : std::runtime_error(what) {}
};

struct TimeGridMismatchError : std::runtime_error {
  explicit TimeGridMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightOverflowError : std::runtime_error {
  explicit WeightOverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroStepsError : std::runtime_error {
  explicit ZeroStepsError(const std::string& what) : std::runtime_error(what) {}
};

struct CflViolationError : std::runtime_error {
  explicit CflViolationError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct HorizonUnderflowError : std::runtime_error {
  explicit HorizonUnderflowError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when truncated-box data leaks too much energy into the boundary
// shell; the periodic proxy for the whole space is no longer trustworthy.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what), field_name(field) {}
  std::string field_name;
};

}  // namespace nsalpha
