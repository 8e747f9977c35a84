// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/states.hpp"

namespace ets {
namespace {

TEST(BranchSuperposition, RejectsMalformedInput) {
  EXPECT_THROW(BranchSuperposition({}), Error);
  EXPECT_THROW(BranchSuperposition({{1.0, {Amplitude(1.0)}}, {1.0, {Amplitude(1.0), Amplitude(2.0)}}}), Error);
  // Equal and opposite copies of one branch have zero norm.
  EXPECT_THROW(BranchSuperposition({{1.0, {Amplitude(0.5)}}, {-1.0, {Amplitude(0.5)}}}), Error);
}

TEST(BranchSuperposition, GhzGramNormMatchesOverlapFormula) {
  const Amplitude a[] = {Amplitude(0.6), Amplitude(0.6), Amplitude(0.6)};
  const auto s = ghz_branches(a);
  ASSERT_EQ(s.branches().size(), 2u);
  const Complex c0 = s.branches()[0].coeff, c1 = s.branches()[1].coeff;
  const double cross = std::exp(-6.0 * 0.36);
  const double expect = std::norm(c0) + std::norm(c1) + 2.0 * (c0 * std::conj(c1)).real() * cross;
  EXPECT_NEAR(s.gram_norm(), expect, 1e-14);
}

TEST(BranchSuperposition, ReferencesFixTheLogicalFrame) {
  const auto w = w_branches(Amplitude(1.5));
  for (const auto& r : w.references()) EXPECT_EQ(r.value(), Complex(1.5, 0.0));
  // Default references come from the first branch, folded into Re > 0.
  const BranchSuperposition s({{1.0, {Amplitude(-2.0), Amplitude(0.0, -1.0)}}, {1.0, {Amplitude(2.0), Amplitude(0.0, 1.0)}}});
  EXPECT_EQ(s.references()[0].value(), Complex(2.0, 0.0));
  EXPECT_EQ(s.references()[1].value(), Complex(0.0, 1.0));
  EXPECT_THROW(BranchSuperposition({{1.0, {Amplitude(1.0)}}}, {Amplitude(2.0)}), Error);
}

TEST(BranchSuperposition, WStateHasThreeBranches) {
  const auto s = w_branches(Amplitude(1.0));
  EXPECT_EQ(s.num_modes(), 3u);
  EXPECT_EQ(s.branches().size(), 3u);
  EXPECT_GT(s.gram_norm(), 0.0);
}

TEST(Family, NamesRoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("ghz5"), Error);
}

TEST(Family, ModeCounts) {
  const std::size_t expect[] = {3, 3, 3, 4, 4, 4, 3};
  std::size_t i = 0;
  for (Family f : kAllFamilies) EXPECT_EQ(make_family(f, 2.0, 1.0).templ.num_modes(), expect[i++]) << family_name(f);
}

TEST(Family, PatternSupport) {
  auto support = [](Family f) {
    int n = 0;
    for (const auto& c : make_family(f, 1.0, 1.0).templ.pattern_coefficients()) n += std::abs(c) > 0 ? 1 : 0;
    return n;
  };
  EXPECT_EQ(support(Family::Ghz3Conditional), 2);
  EXPECT_EQ(support(Family::Ghz4Conditional), 2);
  EXPECT_EQ(support(Family::W3), 3);
  EXPECT_EQ(support(Family::Cluster4Conditional), 4);
}

TEST(Family, BeamSplitterScalesAndRecordsTransmittivities) {
  const auto f = make_family(Family::Ghz3BeamSplitter, 5.0, 3.0);
  EXPECT_NEAR(f.transmittivity_t1, std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(f.transmittivity_t2, 1.0 / std::numbers::sqrt2, 1e-15);
  ASSERT_EQ(f.mixture.variables.size(), 1u);
  for (const auto& row : f.mixture.amplitude_map) EXPECT_NEAR(row[0], 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(Family, ConditionalUsesIndependentModes) {
  const auto f = make_family(Family::Cluster4Conditional, 5.0, 3.0);
  EXPECT_EQ(f.mixture.variables.size(), 4u);
  EXPECT_FALSE(f.mixture.degenerate());
  EXPECT_TRUE(make_family(Family::Cluster4Conditional, 1.0, 3.0).mixture.degenerate());
}

TEST(Family, RejectsUnphysicalParameters) {
  EXPECT_THROW(make_family(Family::W3, 0.5, 1.0), Error);
  EXPECT_THROW(make_family(Family::W3, 2.0, -1.0), Error);
}

TEST(ThermalMixtureSpec, SlotAmplitudesApplyMap) {
  ThermalMixtureSpec s{{{1.0, 0.0}, {1.0, 0.0}}, {{2.0, 0.0}, {0.0, 0.5}, {1.0, 1.0}}};
  const Complex v[] = {{1.0, 2.0}, {4.0, 0.0}};
  const auto a = s.slot_amplitudes(v);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], Complex(2.0, 4.0));
  EXPECT_EQ(a[1], Complex(2.0, 0.0));
  EXPECT_EQ(a[2], Complex(5.0, 2.0));
}

}  // namespace
}  // namespace ets
