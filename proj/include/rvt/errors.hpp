// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rvt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Tensor or grid extents do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument value was violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed or missing input data (files, magic numbers, schemas).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Non-finite loss or divergence during optimization.
class TrainingError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvt
