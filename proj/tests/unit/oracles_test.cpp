// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/oracles.hpp"

namespace ets {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ClosedForms, ErfArgumentReducesAtUnitEfficiency) {
  EXPECT_DOUBLE_EQ(erf_argument(4.0, 3.0, 1.0), std::numbers::sqrt2 * 3.0 / 2.0);
}

TEST(ClosedForms, EfficiencyActsAsSubstitution) {
  // d -> eta d and V -> 1 + eta^2 (V - 1) inside the Erf.
  const double V = 9.0, d = 2.0, eta = 0.4;
  EXPECT_NEAR(erf_argument(V, d, eta), erf_argument(1 + eta * eta * (V - 1), eta * d, 1.0), 1e-15);
}

TEST(ClosedForms, GhzLimits) {
  EXPECT_DOUBLE_EQ(ghz2_correlation_closed(3.0, 0.0, 1.0, 0.1, 0.2, 0.3), 0.0);
  EXPECT_NEAR(ghz2_correlation_closed(3.0, 80.0, 1.0, 0.1, 0.2, 0.3), std::cos(0.6), 1e-15);
  EXPECT_NEAR(ghz2_correlation_closed(3.0, 80.0, 1.0, 0.1, 0.2, 0.3), spin_ghz_correlation(0.1, 0.2, 0.3), 1e-15);
}

TEST(ClosedForms, SvetlichnyNeedsEquatorialSettings) {
  AngleSet a(3, std::vector<EffectiveRotation>(2, EffectiveRotation{1.0, 0.0}));
  EXPECT_THROW(svetlichny_ghz2_closed(2.0, 1.0, 1.0, a), Error);
}

TEST(ClosedForms, SasaSaturatesAtFour) {
  EXPECT_DOUBLE_EQ(sasa_closed(10.0, 0.0, 1.0), 0.0);
  EXPECT_NEAR(sasa_closed(10.0, 60.0, 1.0), 4.0, 1e-15);
  const double e = std::erf(std::numbers::sqrt2 * 2.0 / std::sqrt(10.0));
  EXPECT_NEAR(sasa_closed(10.0, 2.0, 1.0), 2 * e * e * e * (1 + e), 1e-15);
}

TEST(ClosedForms, WCorrelationBracket) {
  EXPECT_NEAR(w_correlation_closed(1.0, 50.0, 0.0, 0.0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(w_correlation_closed(1.0, 50.0, kPi / 2, 0.0, 0.0), 2.0 * std::cos(kPi / 2) / 3.0, 1e-15);
}

TEST(QubitModel, GhzParityIsOne) {
  const auto templ = make_family(Family::Ghz3Conditional, 1.0, 1.0).templ;
  const std::vector<PartySetting> x(3, PartySetting::rotate(pauli_rotation(Pauli::X)));
  EXPECT_NEAR(qubit_correlation(templ, x), 1.0, 1e-15);
}

}  // namespace
}  // namespace ets
