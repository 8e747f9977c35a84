// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// Figure-reproduction presets.
///
/// | name | family            | functional  | evaluator | eta | V                    |
/// |------|-------------------|-------------|-----------|-----|----------------------|
/// | fig2 | ghz3-cond         | svetlichny3 | closed    | 0.1 | 1, 5, 10, 25, 50, 100|
/// | fig3 | ghz3-bs,ghz3-cond | svetlichny3 | numeric   | 0.3 | 5, 10                |
/// | fig4 | w3                | svetlichny3 | numeric   | 1   | 1, 5, 10, 25         |
/// | fig5 | ghz4-cond         | svetlichny4 | numeric   | 0.1 | 1, 5, 10, 25         |
/// | fig6 | cluster4-cond     | sasa        | closed    | 1   | 1, 5, 10, 100, 1000  |
/// |      | cluster4-kerr     | sasa        | numeric   | 1   | 1, 5, 10, 100, 1000  |
/// | fig7 | cluster4-cond     | wwzb4       | numeric   | 1   | 1, 5, 10, 100        |
///
/// Every V gets its own d grid: 0 followed by 59 log-spaced points from
/// D/1000 to D, with D = 10 sqrt(1/eta^2 + V - 1). Axis extents are
/// approximate; the plots they mirror carry no exact ranges.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ets/sweeps.hpp"

namespace ets {

const std::vector<std::string>& figure_names();

/// 60-point d grid for one (V, eta).
std::vector<double> figure_d_grid(double V, double eta);

/// Throws InvalidArgument for an unknown name.
std::vector<SweepPlan> figure_plans(std::string_view name, const QuadratureConfig& cfg = {});

std::vector<SweepResult> run_figure(std::string_view name, const QuadratureConfig& cfg = {});

}  // namespace ets
