// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace spout {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the given region kind.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling gave up (region of near-zero measure).
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// An iterative evaluation failed to converge; carries the last partial value.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double partial)
      : Error(what), partial_(partial) {}

  double partial() const noexcept { return partial_; }

 private:
  double partial_;
};

}  // namespace spout
