// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/error.hpp"

namespace ets {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::AmplitudeOutOfRange: return "amplitude-out-of-range";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::NonConvergence: return "nonconvergence";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::InconsistentState: return "inconsistent-state";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ets
