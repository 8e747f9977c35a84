// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// Closed forms used as ground truth and as the fast figure path.
///
/// All GHZ-type forms use the prepared-state trace as normalization, which
/// for n independent thermal modes gives the factor 1/(1 + g^n) with g the
/// averaged branch overlap exp(-2 d^2/V)/V. The factor tends to 1 for
/// d^2 >> V.

#pragma once

#include <span>
#include <vector>

#include "ets/inequalities.hpp"
#include "ets/measurement.hpp"
#include "ets/states.hpp"

namespace ets {

/// sqrt(2) d eta / sqrt(1 + eta^2 (V - 1))
double erf_argument(double V, double d, double eta);

/// E[exp(-2|alpha|^2)] under P(V, d): exp(-2 d^2 / V) / V.
double averaged_overlap(double V, double d);

/// n-mode GHZ correlation at theta = pi/2 for every party:
/// cos(sum phases) Erf^n / (1 + g^n).
double ghz_correlation_closed(double V, double d, double eta, std::span<const double> phases);

double ghz2_correlation_closed(double V, double d, double eta, double gamma, double delta, double nu);

/// Three-party Svetlichny value of the conditional GHZ mixture. Every setting
/// must have theta = pi/2.
double svetlichny_ghz2_closed(double V, double d, double eta, const AngleSet& angles);

/// (1/3)[cos t cos p cos m + 2 cos(t + p + m)] Erf^3(sqrt(2) d / sqrt(V)).
/// The 1/3 is the exact large-d constant; at finite d the shared-amplitude W
/// mixture is not exactly of this product form.
double w_correlation_closed(double V, double d, double theta, double phi, double mu);

/// 2 Erf^3(g) (1 + Erf(g)) with g = erf_argument(V, d, eta).
double sasa_closed(double V, double d, double eta);

double spin_ghz_correlation(double theta, double phi, double mu);

/// Brute-force qubit expectation of the tensor product of measured
/// observables -cos(t) Z + sin(t)(cos(p) X + sin(p) Y) (identity for ignored
/// parties) in the formal qubit state spanned by the template's branches.
double qubit_correlation(const BranchTemplate& templ, const std::vector<PartySetting>& settings);

/// Inequality value with every correlator replaced by qubit_correlation.
double spin_functional(const InequalitySpec& spec, const AngleSet& angles, const BranchTemplate& templ);

}  // namespace ets
