// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/sweeps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ets/error.hpp"
#include "ets/oracles.hpp"
#include "parallel.hpp"

namespace ets {
namespace {

void check_grid(const std::vector<double>& g, const char* name) {
  if (g.empty()) raise(ErrorCode::InvalidArgument, std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i])) raise(ErrorCode::InvalidArgument, std::string(name) + " grid has a non-finite value");
    if (i > 0 && !(g[i] > g[i - 1])) {
      raise(ErrorCode::InvalidArgument, std::string(name) + " grid must be strictly increasing");
    }
  }
}

Estimate closed_functional(InequalityName n, Family f, double V, double d, double eta, const AngleSet& angles) {
  const auto& spec = inequality_spec(n);
  check_arity(spec, angles);
  if (n == InequalityName::Sasa) {
    const auto canon = canonical_angles(n, f).angles;
    for (std::size_t p = 0; p < angles.size(); ++p) {
      for (std::size_t s = 0; s < angles[p].size(); ++s) {
        const auto a = angles[p][s].normalized(), b = canon[p][s].normalized();
        if (std::abs(a.theta - b.theta) > 1e-12 || std::abs(a.phase - b.phase) > 1e-12) {
          raise(ErrorCode::Unsupported, "closed SASA form holds for the stabilizer settings only");
        }
      }
    }
    return {sasa_closed(V, d, eta), 0.0};
  }
  double sum = 0.0;
  std::vector<double> phases(spec.parties());
  for (const auto& t : spec.terms) {
    for (std::size_t p = 0; p < spec.parties(); ++p) {
      const auto& r = angles[p][static_cast<std::size_t>(t.setting[p])];
      if (std::abs(std::remainder(r.theta - 0.5 * std::numbers::pi, 2.0 * std::numbers::pi)) > 1e-12) {
        raise(ErrorCode::Unsupported, "closed GHZ forms need theta = pi/2 settings");
      }
      phases[p] = r.phase;
    }
    sum += t.sign * ghz_correlation_closed(V, d, eta, phases);
  }
  return {std::abs(sum), 0.0};
}

}  // namespace

bool has_closed_form(InequalityName n, Family f) noexcept {
  switch (n) {
    case InequalityName::Mermin3:
    case InequalityName::Svetlichny3: return f == Family::Ghz3Conditional;
    case InequalityName::Svetlichny4: return f == Family::Ghz4Conditional;
    case InequalityName::Sasa: return f == Family::Cluster4Conditional;
    case InequalityName::Wwzb4: return false;
  }
  return false;
}

void SweepPlan::validate() const {
  check_grid(V_grid, "V");
  check_grid(d_grid, "d");
  check_grid(eta_grid, "eta");
  if (V_grid.front() < 1.0) raise(ErrorCode::InvalidArgument, "V must be >= 1");
  if (d_grid.front() < 0.0) raise(ErrorCode::InvalidArgument, "d must be >= 0");
  if (!(eta_grid.front() > 0.0) || eta_grid.back() > 1.0) raise(ErrorCode::InvalidArgument, "eta must lie in (0, 1]");
  cfg.validate();
  const auto& spec = inequality_spec(inequality);
  if (make_family(family, 1.0, 0.0).templ.num_modes() != spec.parties()) {
    raise(ErrorCode::Unsupported, "family and inequality party counts differ");
  }
  if (angle_mode == AngleMode::Explicit) check_arity(spec, explicit_angles);
  if (angle_mode == AngleMode::Canonical && !has_canonical(inequality, family)) {
    raise(ErrorCode::Unsupported, "no canonical angles for this family; use optimize or explicit angles");
  }
  if (angle_mode == AngleMode::Optimize && restarts < 1) raise(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (evaluator == Evaluator::ClosedForm) {
    if (!has_closed_form(inequality, family)) raise(ErrorCode::Unsupported, "no closed form for this pair");
    if (angle_mode == AngleMode::Optimize) raise(ErrorCode::Unsupported, "closed forms do not optimize angles");
  }
}

bool SweepResult::any_failed() const noexcept {
  for (const auto& r : rows) {
    if (r.failed) return true;
  }
  return false;
}

Estimate functional_value(Family family, InequalityName n, double V, double d, double eta,
                          const QuadratureConfig& cfg, Evaluator ev, const AngleSet* angles) {
  const AngleSet a = angles ? *angles : canonical_angles(n, family).angles;
  if (ev == Evaluator::ClosedForm) {
    if (!has_closed_form(n, family)) raise(ErrorCode::Unsupported, "no closed form for this pair");
    DetectorModel{eta}.validate();
    return closed_functional(n, family, V, d, eta, a);
  }
  return evaluate(inequality_spec(n), a, family, V, d, DetectorModel{eta}, cfg);
}

SweepResult run_sweep(const SweepPlan& plan) {
  plan.validate();
  const auto& spec = inequality_spec(plan.inequality);
  SweepResult res{plan, {}};
  for (double V : plan.V_grid) {
    for (double d : plan.d_grid) {
      for (double eta : plan.eta_grid) {
        SweepRow r;
        r.V = V;
        r.d = d;
        r.eta = eta;
        res.rows.push_back(std::move(r));
      }
    }
  }

  detail::parallel_for(res.rows.size(), [&](std::size_t i) {
    SweepRow& row = res.rows[i];
    try {
      Estimate e;
      switch (plan.angle_mode) {
        case AngleMode::Canonical: {
          auto c = canonical_angles(plan.inequality, plan.family);
          row.angles = std::move(c.angles);
          row.provenance = std::move(c.provenance);
          e = functional_value(plan.family, plan.inequality, row.V, row.d, row.eta, plan.cfg, plan.evaluator,
                               &row.angles);
          break;
        }
        case AngleMode::Explicit:
          row.angles = plan.explicit_angles;
          row.provenance = "explicit";
          e = functional_value(plan.family, plan.inequality, row.V, row.d, row.eta, plan.cfg, plan.evaluator,
                               &row.angles);
          break;
        case AngleMode::Optimize: {
          const auto opt = optimize_angles(spec, plan.family, row.V, row.d, DetectorModel{row.eta}, plan.cfg,
                                           plan.restarts);
          row.angles = opt.angles;
          row.provenance = "optimizer";
          e = opt.value;
          break;
        }
      }
      row.value = e.value;
      row.err = e.err;
      row.violated = row.value > spec.lr_bound + row.err;
    } catch (const std::exception& ex) {
      row.failed = true;
      row.error = ex.what();
      row.value = std::nan("");
      row.err = std::nan("");
      row.violated = false;
    }
  });
  return res;
}

double threshold_displacement(Family family, InequalityName n, double V, double eta, double level,
                              const QuadratureConfig& cfg, Evaluator ev) {
  if (!(V >= 1.0)) raise(ErrorCode::InvalidArgument, "V must be >= 1");
  DetectorModel{eta}.validate();
  const double d_max = 20.0 * std::sqrt(V);
  // Grid spacing tied to the width of the Erf ramp in d.
  const double ramp = std::sqrt(1.0 / (eta * eta) + V - 1.0) / std::numbers::sqrt2;
  const double h = std::min(ramp / 8.0, d_max / 64.0);
  auto f = [&](double d) { return functional_value(family, n, V, d, eta, cfg, ev); };

  Estimate prev = f(0.0);
  if (prev.value >= level) return 0.0;
  double lo = 0.0, hi = -1.0;
  for (double d = h; d <= d_max + 1e-12; d += h) {
    const Estimate cur = f(d);
    if (cur.value < prev.value - (1e-9 + cur.err + prev.err)) {
      std::ostringstream msg;
      msg << "functional decreases in d near d = " << d;
      raise(ErrorCode::InconsistentState, msg.str());
    }
    if (cur.value >= level) {
      hi = d;
      break;
    }
    lo = d;
    prev = cur;
  }
  if (hi < 0.0) raise(ErrorCode::NonConvergence, "level not reached for d <= 20 sqrt(V)");
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (f(mid).value >= level ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double crossing_displacement(Family family, InequalityName n, double V, double eta, const QuadratureConfig& cfg,
                             Evaluator ev) {
  return threshold_displacement(family, n, V, eta, inequality_spec(n).lr_bound, cfg, ev);
}

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) raise(ErrorCode::InvalidArgument, "bad number '" + s + "' in grid '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
  if (text.empty() || parts.empty()) raise(ErrorCode::InvalidArgument, "empty grid");

  if (sep == ':') {
    if (parts.size() != 3) raise(ErrorCode::InvalidArgument, "range grids take the form a:b:n");
    const double a = number(parts[0]), b = number(parts[1]);
    const double nd = number(parts[2]);
    if (nd < 1 || nd != std::floor(nd) || nd > 1e6) raise(ErrorCode::InvalidArgument, "range point count must be a positive integer");
    const auto n = static_cast<std::size_t>(nd);
    if (n == 1) return {a};
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = b;
    return g;
  }
  std::vector<double> g;
  for (const auto& p : parts) g.push_back(number(p));
  return g;
}

}  // namespace ets
