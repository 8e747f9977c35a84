// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/figures.hpp"

#include <cmath>

#include "ets/error.hpp"

namespace ets {
namespace {

struct Curve {
  Family family;
  InequalityName inequality;
  Evaluator evaluator;
};

struct Preset {
  std::string_view name;
  std::vector<Curve> curves;
  double eta;
  std::vector<double> V;
};

const std::vector<Preset>& presets() {
  using F = Family;
  using I = InequalityName;
  using E = Evaluator;
  static const std::vector<Preset> table = {
      {"fig2", {{F::Ghz3Conditional, I::Svetlichny3, E::ClosedForm}}, 0.1, {1, 5, 10, 25, 50, 100}},
      {"fig3",
       {{F::Ghz3BeamSplitter, I::Svetlichny3, E::Numeric}, {F::Ghz3Conditional, I::Svetlichny3, E::Numeric}},
       0.3,
       {5, 10}},
      {"fig4", {{F::W3, I::Svetlichny3, E::Numeric}}, 1.0, {1, 5, 10, 25}},
      {"fig5", {{F::Ghz4Conditional, I::Svetlichny4, E::Numeric}}, 0.1, {1, 5, 10, 25}},
      {"fig6",
       {{F::Cluster4Conditional, I::Sasa, E::ClosedForm}, {F::Cluster4CrossKerr, I::Sasa, E::Numeric}},
       1.0,
       {1, 5, 10, 100, 1000}},
      {"fig7", {{F::Cluster4Conditional, I::Wwzb4, E::Numeric}}, 1.0, {1, 5, 10, 100}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

std::vector<double> figure_d_grid(double V, double eta) {
  const double top = 10.0 * std::sqrt(1.0 / (eta * eta) + V - 1.0);
  const double bottom = top * 1e-3;
  std::vector<double> g{0.0};
  for (int i = 0; i < 59; ++i) g.push_back(bottom * std::pow(top / bottom, i / 58.0));
  g.back() = top;
  return g;
}

std::vector<SweepPlan> figure_plans(std::string_view name, const QuadratureConfig& cfg) {
  for (const auto& p : presets()) {
    if (p.name != name) continue;
    std::vector<SweepPlan> plans;
    for (const auto& c : p.curves) {
      for (double V : p.V) {
        SweepPlan plan;
        plan.family = c.family;
        plan.inequality = c.inequality;
        plan.evaluator = c.evaluator;
        plan.V_grid = {V};
        plan.d_grid = figure_d_grid(V, p.eta);
        plan.eta_grid = {p.eta};
        plan.cfg = cfg;
        plans.push_back(std::move(plan));
      }
    }
    return plans;
  }
  raise(ErrorCode::InvalidArgument, "unknown figure '" + std::string(name) + "'");
}

std::vector<SweepResult> run_figure(std::string_view name, const QuadratureConfig& cfg) {
  std::vector<SweepResult> out;
  for (const auto& plan : figure_plans(name, cfg)) out.push_back(run_sweep(plan));
  return out;
}

}  // namespace ets
