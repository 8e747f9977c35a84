// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/measurement.hpp"
#include "ets/oracles.hpp"
#include "ets/states.hpp"

namespace ets {
namespace {

constexpr double kPi = std::numbers::pi;

BranchSuperposition instance(Family f, double a) {
  const auto fam = make_family(f, 1.0, a);
  const std::vector<Complex> slots(fam.mixture.num_slots(), Complex(a, 0.0));
  return fam.templ.instantiate(slots);
}

TEST(Rotation, PauliAxes) {
  EXPECT_DOUBLE_EQ(pauli_rotation(Pauli::X).theta, kPi / 2);
  EXPECT_DOUBLE_EQ(pauli_rotation(Pauli::X).phase, 0.0);
  EXPECT_DOUBLE_EQ(pauli_rotation(Pauli::Y).phase, kPi / 2);
  EXPECT_DOUBLE_EQ(pauli_rotation(Pauli::Z).theta, kPi);
}

TEST(Rotation, MatrixIsUnitary) {
  const auto m = EffectiveRotation{0.7, 1.9}.matrix();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 2; ++k) s += m[r][k] * std::conj(m[c][k]);
      EXPECT_NEAR(std::abs(s - (r == c ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(Rotation, TiltedSettingMeasuresRotatedAxis) {
  BranchTemplate one{{1.0}, {{1}}};  // logical |0>
  for (double v : {0.0, 0.3, 1.2, 2.5}) {
    const double got = qubit_correlation(one, {PartySetting::rotate(tilted_rotation(v))});
    EXPECT_NEAR(got, -std::cos(v), 1e-14) << v;
  }
}

TEST(Detector, ValidatesEfficiency) {
  EXPECT_NO_THROW(DetectorModel{1.0}.validate());
  EXPECT_THROW(DetectorModel{0.0}.validate(), Error);
  EXPECT_THROW(DetectorModel{1.2}.validate(), Error);
}

TEST(Detector, UnitEfficiencyIsIdeal) {
  const Amplitude a(0.9, -0.2), b(-0.4, 0.6);
  const auto ideal = halfline_integrals(a, b), lossy = apply_inefficiency(DetectorModel{1.0}, a, b);
  EXPECT_LT(std::abs(ideal.plus - lossy.plus), 1e-15);
  EXPECT_LT(std::abs(ideal.minus - lossy.minus), 1e-15);
}

TEST(Detector, LossPreservesTrace) {
  const Amplitude a(0.9, -0.2), b(-0.4, 0.6);
  for (double eta : {0.1, 0.5, 0.9}) {
    const auto h = apply_inefficiency(DetectorModel{eta}, a, b);
    EXPECT_LT(std::abs(h.plus + h.minus - coherent_overlap(a, b)), 1e-14) << eta;
  }
}

TEST(SignProbabilities, OutcomeNormalizationSumsToOne) {
  const auto s = instance(Family::W3, 0.8);
  const std::vector<PartySetting> st{PartySetting::rotate(0.4, 1.0), PartySetting::rotate(2.0, -0.5),
                                     PartySetting::rotate(1.1, 0.2)};
  const auto p = joint_sign_probabilities(s, st, DetectorModel{0.7}, Normalization::Outcomes);
  double sum = 0.0;
  for (const auto& [pattern, prob] : p) {
    EXPECT_GE(prob, -1e-15);
    sum += prob;
  }
  EXPECT_NEAR(sum, 1.0, 1e-13);
}

TEST(SignProbabilities, IgnoredPartyIsMarginalized) {
  const auto s = instance(Family::Cluster4Conditional, 1.0);
  const std::vector<PartySetting> st{PartySetting::rotate(kPi, 0.0), PartySetting::ignore(),
                                     PartySetting::rotate(kPi / 2, 0.0), PartySetting::rotate(kPi / 2, 0.0)};
  const auto p = joint_sign_probabilities(s, st, DetectorModel{1.0}, Normalization::Outcomes);
  EXPECT_LE(p.size(), 8u);
}

// Large amplitudes make the coherent branches orthogonal, recovering qubits.
TEST(Correlation, SpinLimitMatchesQubitModel) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (Family f : {Family::Ghz3Conditional, Family::W3, Family::Ghz4Conditional, Family::Cluster4Conditional}) {
    const auto s = instance(f, 6.0);
    const auto templ = make_family(f, 1.0, 6.0).templ;
    for (int t = 0; t < 10; ++t) {
      std::vector<PartySetting> st;
      for (std::size_t m = 0; m < s.num_modes(); ++m) st.push_back(PartySetting::rotate(ang(rng), ang(rng)));
      EXPECT_NEAR(correlation(s, st, DetectorModel{1.0}), qubit_correlation(templ, st), 1e-10) << family_name(f);
    }
  }
}

TEST(Correlation, GhzPureStateMatchesClosedForm) {
  const auto s = instance(Family::Ghz3Conditional, 0.7);
  const double g = 0.3, h = -1.1, k = 2.0;
  const std::vector<PartySetting> st{PartySetting::rotate(kPi / 2, g), PartySetting::rotate(kPi / 2, h),
                                     PartySetting::rotate(kPi / 2, k)};
  for (double eta : {0.3, 1.0}) {
    EXPECT_NEAR(correlation(s, st, DetectorModel{eta}), ghz2_correlation_closed(1.0, 0.7, eta, g, h, k), 1e-13);
  }
}

}  // namespace
}  // namespace ets
