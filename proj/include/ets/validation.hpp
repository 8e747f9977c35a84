// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// Oracle-vs-numeric acceptance suite.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ets/integration.hpp"

namespace ets {

struct ValidationCheck {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  QuadratureConfig cfg;
  bool mutate = false;  // flip one sign per functional before the bound check
};

inline constexpr int kValidationChecks = 12;

/// Short name of check `id` (1-based).
std::string validation_check_name(int id);

/// Runs one check; a thrown error is reported as a failure.
ValidationCheck run_validation_check(int id, const ValidationOptions& opt = {});

/// All checks in order; `on_check` sees each result as soon as it is ready.
std::vector<ValidationCheck> run_validation(const ValidationOptions& opt = {},
                                            const std::function<void(const ValidationCheck&)>& on_check = {});

}  // namespace ets
