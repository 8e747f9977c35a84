// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/inequalities.hpp"
#include "ets/oracles.hpp"

namespace ets {
namespace {

const double kRoot2 = std::numbers::sqrt2;

TEST(InequalitySpec, NamesRoundTrip) {
  for (InequalityName n : kAllInequalities) EXPECT_EQ(parse_inequality(inequality_name(n)), n);
  EXPECT_THROW(parse_inequality("chsh"), Error);
}

TEST(InequalitySpec, BoundsAndSizes) {
  EXPECT_EQ(inequality_spec(InequalityName::Mermin3).terms.size(), 4u);
  EXPECT_EQ(inequality_spec(InequalityName::Svetlichny3).terms.size(), 8u);
  EXPECT_EQ(inequality_spec(InequalityName::Svetlichny4).terms.size(), 16u);
  EXPECT_EQ(inequality_spec(InequalityName::Sasa).terms.size(), 4u);
  EXPECT_EQ(inequality_spec(InequalityName::Wwzb4).terms.size(), 16u);
  EXPECT_DOUBLE_EQ(inequality_spec(InequalityName::Svetlichny4).quantum_max, 8 * kRoot2);
}

TEST(Bounds, ExhaustiveMaximaEqualStatedBounds) {
  for (InequalityName n : kAllInequalities) {
    const auto& s = inequality_spec(n);
    EXPECT_EQ(model_bound_max(s), static_cast<int>(s.lr_bound)) << inequality_name(n);
    EXPECT_LE(local_bound_max(s), static_cast<int>(s.lr_bound));
  }
}

TEST(Bounds, MutationBreaksBound) {
  for (InequalityName n : kAllInequalities) {
    const auto& s = inequality_spec(n);
    EXPECT_GT(model_bound_max(mutated(s)), static_cast<int>(s.lr_bound)) << inequality_name(n);
  }
}

TEST(Bounds, SvetlichnyBipartiteValues) {
  EXPECT_EQ(local_bound_max(inequality_spec(InequalityName::Mermin3)), 2);
  EXPECT_EQ(bipartite_bound_max(inequality_spec(InequalityName::Svetlichny3)), 4);
  EXPECT_EQ(bipartite_bound_max(inequality_spec(InequalityName::Svetlichny4)), 8);
}

// Coherent branches far apart behave as qubits; the canonical settings reach
// the known spin-1/2 optima.
TEST(CanonicalAngles, SpinOptima) {
  struct {
    InequalityName n;
    Family f;
    double value;
  } cases[] = {
      {InequalityName::Mermin3, Family::Ghz3Conditional, 4.0},
      {InequalityName::Svetlichny3, Family::Ghz3Conditional, 4 * kRoot2},
      {InequalityName::Svetlichny3, Family::Ghz3Kerr, 4 * kRoot2},
      {InequalityName::Svetlichny3, Family::W3, 4.354648431614539},
      {InequalityName::Svetlichny4, Family::Ghz4Conditional, 8 * kRoot2},
      {InequalityName::Sasa, Family::Cluster4Conditional, 4.0},
      {InequalityName::Wwzb4, Family::Cluster4Conditional, 4 * kRoot2},
  };
  for (const auto& c : cases) {
    const auto angles = canonical_angles(c.n, c.f).angles;
    const double v = spin_functional(inequality_spec(c.n), angles, make_family(c.f, 1.0, 1.0).templ);
    EXPECT_NEAR(v, c.value, 1e-9) << inequality_name(c.n) << " " << family_name(c.f);
  }
}

TEST(CanonicalAngles, AvailabilityAndProvenance) {
  EXPECT_FALSE(has_canonical(InequalityName::Mermin3, Family::W3));
  EXPECT_THROW(canonical_angles(InequalityName::Mermin3, Family::W3), Error);
  EXPECT_EQ(canonical_angles(InequalityName::Svetlichny4, Family::Ghz4Conditional).provenance, "derived");
}

TEST(Evaluate, ArityIsChecked) {
  AngleSet bad{{EffectiveRotation{}}};
  EXPECT_THROW(check_arity(inequality_spec(InequalityName::Mermin3), bad), Error);
}

TEST(Evaluate, ErrorsAccumulate) {
  const auto& spec = inequality_spec(InequalityName::Mermin3);
  const auto angles = canonical_angles(InequalityName::Mermin3, Family::Ghz3Conditional).angles;
  const auto e = evaluate(spec, angles, [](const std::vector<PartySetting>&) { return Estimate{0.5, 0.01}; });
  EXPECT_NEAR(e.value, 1.0, 1e-15);  // +1 +1 +1 -1 terms
  EXPECT_NEAR(e.err, 0.04, 1e-15);
}

TEST(Optimizer, DeterministicAndNoWorseThanCanonical) {
  const auto fam = make_family(Family::W3, 3.0, 2.0);
  const MixtureKernel k(fam, DetectorModel{1.0}, {});
  const auto& spec = inequality_spec(InequalityName::Svetlichny3);
  const auto canon = canonical_angles(InequalityName::Svetlichny3, Family::W3).angles;
  const double base = evaluate(spec, canon, k).value;
  const auto a = optimize_angles(spec, k, 4, 99, &canon);
  const auto b = optimize_angles(spec, k, 4, 99, &canon);
  EXPECT_EQ(a.value.value, b.value.value);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_GE(a.value.value, base - 1e-12);
}

TEST(Optimizer, KerrResourceViolates) {
  const auto r = optimize_angles(inequality_spec(InequalityName::Svetlichny3), Family::Ghz3Kerr, 5.0,
                                 5.0 * std::sqrt(5.0), DetectorModel{1.0}, {}, 3);
  EXPECT_GT(r.value.value, 4.0);
}

}  // namespace
}  // namespace ets
