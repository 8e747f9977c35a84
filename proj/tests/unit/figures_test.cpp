// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/figures.hpp"
#include "ets/oracles.hpp"

namespace ets {
namespace {

TEST(Figures, Names) {
  EXPECT_EQ(figure_names(), (std::vector<std::string>{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
  EXPECT_THROW(figure_plans("fig1"), Error);
}

TEST(Figures, DisplacementGrid) {
  const auto g = figure_d_grid(10.0, 0.1);
  ASSERT_EQ(g.size(), 60u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_DOUBLE_EQ(g.back(), 10.0 * std::sqrt(100.0 + 9.0));
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);
}

TEST(Figures, PresetShapes) {
  EXPECT_EQ(figure_plans("fig2").size(), 6u);
  const auto fig3 = figure_plans("fig3");
  ASSERT_EQ(fig3.size(), 4u);
  EXPECT_EQ(fig3[0].family, Family::Ghz3BeamSplitter);
  EXPECT_EQ(fig3[0].eta_grid.front(), 0.3);
  for (const auto& p : figure_plans("fig6")) EXPECT_NO_THROW(p.validate());
}

TEST(Figures, SasaSurfaceIsTheClosedForm) {
  const auto plans = figure_plans("fig6");
  const auto r = run_sweep(plans.front());
  ASSERT_EQ(plans.front().evaluator, Evaluator::ClosedForm);
  for (const auto& row : r.rows) EXPECT_EQ(row.value, sasa_closed(row.V, row.d, row.eta));
}

TEST(Figures, QuadGhzPlateau) {
  auto plan = figure_plans("fig5")[1];
  plan.d_grid = {plan.d_grid.back()};
  EXPECT_NEAR(run_sweep(plan).rows[0].value, 8.0 * std::sqrt(2.0), 1e-6);
}

}  // namespace
}  // namespace ets
