#pragma once

#include <stdexcept>
#include <string>

namespace uqgln {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not match the operation.
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Exact elimination hit a zero pivot; the caller is expected to resample.
struct SingularError : Error {
  explicit SingularError(const std::string& what) : Error(what) {}
};

/// A sampled point hit a pole of an active formula; resample and retry.
struct ResampleError : Error {
  explicit ResampleError(const std::string& what) : Error(what) {}
};

/// Resampling budget exceeded. Distinct from an identity failure.
struct ExhaustedError : Error {
  explicit ExhaustedError(const std::string& what) : Error(what) {}
};

/// Invalid configuration; `where` is a JSON-pointer-style location.
struct ConfigError : Error {
  std::string where;
  ConfigError(const std::string& what, std::string where_ = "")
      : Error(where_.empty() ? what : what + " (at " + where_ + ")"), where(std::move(where_)) {}
};

}  // namespace uqgln
