// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "ets/error.hpp"
#include "ets/inequalities.hpp"
#include "parallel.hpp"

namespace ets {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Simplex {
  std::vector<double> x;
  double fx = 0.0;
  bool converged = false;
};

// Minimizes f by Nelder-Mead with the standard coefficients (1, 2, 0.5, 0.5).
template <typename F>
Simplex nelder_mead(F&& f, std::vector<double> x0, double step, int max_evals, double ftol) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> p(n + 1, x0);
  std::vector<double> fp(n + 1);
  for (std::size_t i = 0; i < n; ++i) p[i + 1][i] += step;
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i, ++evals) fp[i] = f(p[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  bool converged = false;
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fp[a] < fp[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::abs(fp[worst] - fp[best]) <= ftol * (std::abs(fp[best]) + 1e-12)) {
      converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += p[i][k] / static_cast<double>(n);
    }
    for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + (centroid[k] - p[worst][k]);
    const double fr = f(xr);
    ++evals;
    if (fr < fp[best]) {
      for (std::size_t k = 0; k < n; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - p[worst][k]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        p[worst] = xe;
        fp[worst] = fe;
      } else {
        p[worst] = xr;
        fp[worst] = fr;
      }
      continue;
    }
    if (fr < fp[second]) {
      p[worst] = xr;
      fp[worst] = fr;
      continue;
    }
    const bool outside = fr < fp[worst];
    for (std::size_t k = 0; k < n; ++k) {
      xc[k] = outside ? centroid[k] + 0.5 * (xr[k] - centroid[k]) : centroid[k] + 0.5 * (p[worst][k] - centroid[k]);
    }
    const double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, fp[worst])) {
      p[worst] = xc;
      fp[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) p[i][k] = p[best][k] + 0.5 * (p[i][k] - p[best][k]);
      fp[i] = f(p[i]);
      ++evals;
    }
  }
  const auto it = std::min_element(fp.begin(), fp.end());
  return {p[static_cast<std::size_t>(it - fp.begin())], *it, converged};
}

std::vector<double> flatten(const AngleSet& a) {
  std::vector<double> x;
  for (const auto& party : a) {
    for (const auto& r : party) {
      x.push_back(r.theta);
      x.push_back(r.phase);
    }
  }
  return x;
}

AngleSet unflatten(const InequalitySpec& spec, const std::vector<double>& x) {
  AngleSet a(spec.parties());
  std::size_t k = 0;
  for (std::size_t p = 0; p < spec.parties(); ++p) {
    for (int s = 0; s < spec.settings_per_party[p]; ++s, k += 2) {
      a[p].push_back(EffectiveRotation{x[k], x[k + 1]}.normalized());
    }
  }
  return a;
}

}  // namespace

OptimizeResult optimize_angles(const InequalitySpec& spec, const MixtureKernel& kernel, int restarts,
                               std::uint64_t seed, const AngleSet* start) {
  if (restarts < 1) raise(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (kernel.num_modes() != spec.parties()) raise(ErrorCode::Unsupported, "family and inequality party counts differ");
  if (start) check_arity(spec, *start);
  std::size_t dims = 0;
  for (int s : spec.settings_per_party) dims += 2 * static_cast<std::size_t>(s);

  struct Outcome {
    Simplex s;
    bool failed = false;
    std::string error;
  };
  std::vector<Outcome> out(static_cast<std::size_t>(restarts));
  detail::parallel_for(out.size(), [&](std::size_t r) {
    try {
      std::vector<double> x0;
      if (r == 0 && start) {
        x0 = flatten(*start);
      } else {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> u(0.0, kTwoPi);
        x0.resize(dims);
        for (auto& v : x0) v = u(rng);
      }
      auto objective = [&](const std::vector<double>& x) { return -evaluate(spec, unflatten(spec, x), kernel).value; };
      Simplex s = nelder_mead(objective, x0, 0.4, 4000, 1e-12);
      // A second, tighter pass from the first optimum polishes the result.
      Simplex t = nelder_mead(objective, s.x, 0.05, 4000, 1e-14);
      out[r].s = t.fx <= s.fx ? t : s;
      out[r].s.converged = s.converged || t.converged;
    } catch (const std::exception& e) {
      out[r].failed = true;
      out[r].error = e.what();
    }
  });

  int best = -1;
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (out[r].failed) continue;
    if (best < 0 || out[r].s.fx < out[static_cast<std::size_t>(best)].s.fx) best = static_cast<int>(r);
  }
  if (best < 0) raise(ErrorCode::NonConvergence, "every optimizer restart failed: " + out.front().error);

  OptimizeResult res;
  const auto& s = out[static_cast<std::size_t>(best)].s;
  res.angles = unflatten(spec, s.x);
  res.value = evaluate(spec, res.angles, kernel);
  res.best_restart = best;
  res.stagnated = std::none_of(out.begin(), out.end(), [](const Outcome& o) { return !o.failed && o.s.converged; });
  return res;
}

OptimizeResult optimize_angles(const InequalitySpec& spec, Family family, double V, double d,
                               const DetectorModel& det, const QuadratureConfig& cfg, int restarts) {
  const MixtureKernel kernel(make_family(family, V, d), det, cfg);
  if (has_canonical(spec.name, family)) {
    const AngleSet start = canonical_angles(spec.name, family).angles;
    return optimize_angles(spec, kernel, restarts, cfg.mc_seed, &start);
  }
  return optimize_angles(spec, kernel, restarts, cfg.mc_seed, nullptr);
}

}  // namespace ets
