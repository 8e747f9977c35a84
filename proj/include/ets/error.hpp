// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ets {

enum class ErrorCode {
  InvalidArgument,
  AmplitudeOutOfRange,
  Overflow,
  NonConvergence,
  Unsupported,
  InconsistentState,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code maps 1:1 onto the C API
/// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace ets
