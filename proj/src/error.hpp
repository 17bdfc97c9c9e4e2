/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace linespace {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kNormalization = 2,
  kUndefinedTransition = 3,
  kDomain = 4,
  kBranchPoint = 5,
  kParameter = 6,
  kDegenerate = 7,
  kIo = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by xi_from_dir when the input is not a unit vector.
class NormalizationError : public Error {
 public:
  NormalizationError(double measured_norm, const std::string& what)
      : Error(ErrorCode::kNormalization, what), norm_(measured_norm) {}

  double measured_norm() const noexcept { return norm_; }

 private:
  double norm_;
};

}  // namespace linespace
