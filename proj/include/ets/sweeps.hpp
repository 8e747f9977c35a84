// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ets/inequalities.hpp"
#include "ets/integration.hpp"
#include "ets/states.hpp"

namespace ets {

enum class AngleMode { Canonical, Optimize, Explicit };

enum class Evaluator {
  Numeric,     // mixture kernel
  ClosedForm,  // oracle formulas where they exist
};

bool has_closed_form(InequalityName n, Family f) noexcept;

struct SweepPlan {
  Family family = Family::Ghz3Conditional;
  InequalityName inequality = InequalityName::Svetlichny3;
  AngleMode angle_mode = AngleMode::Canonical;
  AngleSet explicit_angles;
  int restarts = 20;
  Evaluator evaluator = Evaluator::Numeric;
  std::vector<double> V_grid{1.0};
  std::vector<double> d_grid{0.0};
  std::vector<double> eta_grid{1.0};
  QuadratureConfig cfg;

  /// Grids nonempty and strictly increasing, V >= 1, d >= 0, 0 < eta <= 1.
  void validate() const;
};

struct SweepRow {
  double V = 0.0;
  double d = 0.0;
  double eta = 0.0;
  double value = 0.0;
  double err = 0.0;
  bool violated = false;
  bool failed = false;
  std::string error;
  AngleSet angles;
  std::string provenance;  // canonical, derived, optimizer, explicit
};

struct SweepResult {
  SweepPlan plan;
  std::vector<SweepRow> rows;  // ordered by (V, d, eta)

  bool any_failed() const noexcept;
};

/// One row per grid point. Points are evaluated concurrently (ETS_THREADS
/// caps the workers); a failing point is recorded in its row and never aborts
/// the sweep.
SweepResult run_sweep(const SweepPlan& plan);

/// Functional value at a single point with canonical (or given) angles.
Estimate functional_value(Family family, InequalityName n, double V, double d, double eta,
                          const QuadratureConfig& cfg, Evaluator ev = Evaluator::Numeric,
                          const AngleSet* angles = nullptr);

/// Smallest d in [0, 20 sqrt(V)] where the functional reaches `level`, to
/// within 1e-3. The functional is scanned on a uniform grid first and must be
/// nondecreasing up to the bracketing cell (InconsistentState otherwise);
/// NonConvergence when the level is never reached.
double threshold_displacement(Family family, InequalityName n, double V, double eta, double level,
                              const QuadratureConfig& cfg, Evaluator ev = Evaluator::Numeric);

/// threshold_displacement at the local-realistic bound.
double crossing_displacement(Family family, InequalityName n, double V, double eta, const QuadratureConfig& cfg,
                             Evaluator ev = Evaluator::Numeric);

/// Parses "a:b:n" (n points from a to b inclusive) or a comma list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace ets
