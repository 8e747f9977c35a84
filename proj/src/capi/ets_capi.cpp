// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/ets.h"

#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ets/error.hpp"
#include "ets/figures.hpp"
#include "ets/output.hpp"
#include "ets/phase_space.hpp"
#include "ets/sweeps.hpp"
#include "ets/validation.hpp"

struct ets_plan {
  ets::SweepPlan plan;
};

struct ets_result {
  std::vector<ets::SweepResult> sweeps;
  std::string label;
  std::vector<std::pair<std::size_t, std::size_t>> index;  // flat row -> (sweep, row)
};

struct ets_report {
  std::vector<ets::ValidationCheck> checks;
};

namespace {

thread_local std::string g_last_error;

ets_status status_of(ets::ErrorCode c) {
  switch (c) {
    case ets::ErrorCode::InvalidArgument: return ETS_ERR_INVALID_ARGUMENT;
    case ets::ErrorCode::AmplitudeOutOfRange: return ETS_ERR_AMPLITUDE_OUT_OF_RANGE;
    case ets::ErrorCode::Overflow: return ETS_ERR_OVERFLOW;
    case ets::ErrorCode::NonConvergence: return ETS_ERR_NON_CONVERGENCE;
    case ets::ErrorCode::Unsupported: return ETS_ERR_UNSUPPORTED;
    case ets::ErrorCode::InconsistentState: return ETS_ERR_INCONSISTENT_STATE;
    case ets::ErrorCode::Io: return ETS_ERR_IO;
  }
  return ETS_ERR_INTERNAL;
}

ets_status fail(ets_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <typename F>
ets_status guarded(F&& f) {
  try {
    f();
    return ETS_OK;
  } catch (const ets::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ETS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ETS_ERR_INTERNAL, e.what());
  }
}

#define ETS_REQUIRE(cond, what) \
  if (!(cond)) return fail(ETS_ERR_INVALID_ARGUMENT, what)

ets_result* wrap(std::vector<ets::SweepResult> sweeps, std::string label) {
  auto* r = new ets_result{std::move(sweeps), std::move(label), {}};
  for (std::size_t s = 0; s < r->sweeps.size(); ++s) {
    for (std::size_t i = 0; i < r->sweeps[s].rows.size(); ++i) r->index.emplace_back(s, i);
  }
  return r;
}

}  // namespace

extern "C" {

const char* ets_version(void) { return ETS_VERSION_STRING; }

const char* ets_status_string(ets_status status) {
  switch (status) {
    case ETS_OK: return "ok";
    case ETS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case ETS_ERR_AMPLITUDE_OUT_OF_RANGE: return "amplitude-out-of-range";
    case ETS_ERR_OVERFLOW: return "overflow";
    case ETS_ERR_NON_CONVERGENCE: return "non-convergence";
    case ETS_ERR_UNSUPPORTED: return "unsupported";
    case ETS_ERR_INCONSISTENT_STATE: return "inconsistent-state";
    case ETS_ERR_IO: return "io";
    case ETS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ets_last_error(void) { return g_last_error.c_str(); }

ets_status ets_faddeeva(double re, double im, double* out_re, double* out_im) {
  ETS_REQUIRE(out_re && out_im, "null output pointer");
  return guarded([&] {
    const auto w = ets::faddeeva({re, im});
    *out_re = w.real();
    *out_im = w.imag();
  });
}

ets_status ets_plan_create(const char* family, const char* inequality, ets_plan** out) {
  ETS_REQUIRE(family && inequality && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<ets_plan>();
    p->plan.family = ets::parse_family(family);
    p->plan.inequality = ets::parse_inequality(inequality);
    *out = p.release();
  });
}

void ets_plan_destroy(ets_plan* plan) { delete plan; }

ets_status ets_plan_set_grids(ets_plan* plan, const double* V, size_t nV, const double* d, size_t nd,
                              const double* eta, size_t neta) {
  ETS_REQUIRE(plan && V && d && eta, "null argument");
  return guarded([&] {
    plan->plan.V_grid.assign(V, V + nV);
    plan->plan.d_grid.assign(d, d + nd);
    plan->plan.eta_grid.assign(eta, eta + neta);
  });
}

ets_status ets_plan_set_grid_text(ets_plan* plan, const char* V, const char* d, const char* eta) {
  ETS_REQUIRE(plan && V && d && eta, "null argument");
  return guarded([&] {
    auto v = ets::parse_grid(V), dd = ets::parse_grid(d), e = ets::parse_grid(eta);
    plan->plan.V_grid = std::move(v);
    plan->plan.d_grid = std::move(dd);
    plan->plan.eta_grid = std::move(e);
  });
}

ets_status ets_plan_set_angle_mode(ets_plan* plan, const char* mode) {
  ETS_REQUIRE(plan && mode, "null argument");
  const std::string m(mode);
  if (m == "canonical") {
    plan->plan.angle_mode = ets::AngleMode::Canonical;
  } else if (m == "optimize") {
    plan->plan.angle_mode = ets::AngleMode::Optimize;
  } else {
    return fail(ETS_ERR_INVALID_ARGUMENT, "angle mode must be canonical or optimize, got '" + m + "'");
  }
  return ETS_OK;
}

ets_status ets_plan_set_explicit_angles(ets_plan* plan, const double* pairs, size_t count) {
  ETS_REQUIRE(plan && (pairs || count == 0), "null argument");
  return guarded([&] {
    const auto& spec = ets::inequality_spec(plan->plan.inequality);
    std::size_t need = 0;
    for (int k : spec.settings_per_party) need += static_cast<std::size_t>(k);
    if (count != need) {
      ets::raise(ets::ErrorCode::InvalidArgument, std::string(ets::inequality_name(plan->plan.inequality)) + " takes " +
                                                      std::to_string(need) + " (theta, phase) pairs, got " +
                                                      std::to_string(count));
    }
    ets::AngleSet a;
    std::size_t i = 0;
    for (int k : spec.settings_per_party) {
      std::vector<ets::EffectiveRotation> party;
      for (int s = 0; s < k; ++s, ++i) party.push_back({pairs[2 * i], pairs[2 * i + 1]});
      a.push_back(std::move(party));
    }
    plan->plan.explicit_angles = std::move(a);
    plan->plan.angle_mode = ets::AngleMode::Explicit;
  });
}

ets_status ets_plan_set_restarts(ets_plan* plan, int restarts) {
  ETS_REQUIRE(plan, "null plan");
  ETS_REQUIRE(restarts >= 1, "restarts must be >= 1");
  plan->plan.restarts = restarts;
  return ETS_OK;
}

ets_status ets_plan_set_closed_form(ets_plan* plan, int enabled) {
  ETS_REQUIRE(plan, "null plan");
  plan->plan.evaluator = enabled ? ets::Evaluator::ClosedForm : ets::Evaluator::Numeric;
  return ETS_OK;
}

ets_status ets_plan_set_quadrature(ets_plan* plan, int nodes, int64_t mc_samples, uint64_t seed, const char* method,
                                   double rel_tol) {
  ETS_REQUIRE(plan && method, "null argument");
  ETS_REQUIRE(mc_samples > 0, "mc samples must be positive");
  return guarded([&] {
    ets::QuadratureConfig cfg = plan->plan.cfg;
    cfg.nodes_per_axis = nodes;
    cfg.mc_samples = static_cast<std::uint64_t>(mc_samples);
    cfg.mc_seed = seed;
    cfg.method = ets::parse_method(method);
    cfg.rel_tol = rel_tol;
    cfg.validate();
    plan->plan.cfg = cfg;
  });
}

ets_status ets_plan_set_normalization(ets_plan* plan, const char* mode) {
  ETS_REQUIRE(plan && mode, "null argument");
  return guarded([&] { plan->plan.cfg.normalization = ets::parse_normalization(mode); });
}

ets_status ets_plan_validate(const ets_plan* plan) {
  ETS_REQUIRE(plan, "null plan");
  return guarded([&] { plan->plan.validate(); });
}

ets_status ets_run_sweep(const ets_plan* plan, ets_result** out) {
  ETS_REQUIRE(plan && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<ets::SweepResult> v;
    v.push_back(ets::run_sweep(plan->plan));
    *out = wrap(std::move(v), "");
  });
}

size_t ets_figure_count(void) { return ets::figure_names().size(); }

const char* ets_figure_name(size_t index) {
  const auto& n = ets::figure_names();
  return index < n.size() ? n[index].c_str() : nullptr;
}

ets_status ets_run_figure(const char* name, const ets_plan* settings, ets_result** out) {
  ETS_REQUIRE(name && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const ets::QuadratureConfig cfg = settings ? settings->plan.cfg : ets::QuadratureConfig{};
    *out = wrap(ets::run_figure(name, cfg), name);
  });
}

size_t ets_result_row_count(const ets_result* result) { return result ? result->index.size() : 0; }

ets_status ets_result_row(const ets_result* result, size_t index, ets_row* out) {
  ETS_REQUIRE(result && out, "null argument");
  ETS_REQUIRE(index < result->index.size(), "row index out of range");
  const auto [s, i] = result->index[index];
  const auto& sw = result->sweeps[s];
  const auto& r = sw.rows[i];
  const auto& spec = ets::inequality_spec(sw.plan.inequality);
  *out = {r.V, r.d, r.eta, r.value, r.err, spec.lr_bound, spec.quantum_max, r.violated ? 1 : 0, r.failed ? 1 : 0};
  return ETS_OK;
}

ets_status ets_result_row_angles(const ets_result* result, size_t index, double* pairs, size_t capacity,
                                 size_t* count) {
  ETS_REQUIRE(result && count && (pairs || capacity == 0), "null argument");
  ETS_REQUIRE(index < result->index.size(), "row index out of range");
  const auto [s, i] = result->index[index];
  std::size_t n = 0;
  for (const auto& party : result->sweeps[s].rows[i].angles) {
    for (const auto& r : party) {
      if (n < capacity) {
        pairs[2 * n] = r.theta;
        pairs[2 * n + 1] = r.phase;
      }
      ++n;
    }
  }
  *count = n;
  return ETS_OK;
}

const char* ets_result_row_error(const ets_result* result, size_t index) {
  if (!result || index >= result->index.size()) return nullptr;
  const auto [s, i] = result->index[index];
  const auto& r = result->sweeps[s].rows[i];
  return r.failed ? r.error.c_str() : nullptr;
}

int ets_result_any_failed(const ets_result* result) {
  if (!result) return 0;
  for (const auto& s : result->sweeps) {
    if (s.any_failed()) return 1;
  }
  return 0;
}

ets_status ets_result_write(const ets_result* result, const char* path, const char* format) {
  ETS_REQUIRE(result && format, "null argument");
  return guarded([&] {
    const auto fmt = ets::parse_format(format);
    if (!path || std::string(path) == "-") {
      ets::write_results(result->sweeps, std::cout, fmt, result->label);
      std::cout.flush();
    } else {
      ets::write_results_file(result->sweeps, path, fmt, result->label);
    }
  });
}

void ets_result_destroy(ets_result* result) { delete result; }

ets_status ets_validate(int mutate, const ets_plan* settings, ets_check_callback callback, void* user,
                        ets_report** out) {
  ETS_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    ets::ValidationOptions opt;
    if (settings) opt.cfg = settings->plan.cfg;
    opt.mutate = mutate != 0;
    auto rep = std::make_unique<ets_report>();
    rep->checks = ets::run_validation(opt, [&](const ets::ValidationCheck& c) {
      if (callback) callback(c.id, c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
    });
    *out = rep.release();
  });
}

size_t ets_report_count(const ets_report* report) { return report ? report->checks.size() : 0; }

ets_status ets_report_check(const ets_report* report, size_t index, int* id, const char** name, int* passed,
                            const char** detail) {
  ETS_REQUIRE(report, "null report");
  ETS_REQUIRE(index < report->checks.size(), "check index out of range");
  const auto& c = report->checks[index];
  if (id) *id = c.id;
  if (name) *name = c.name.c_str();
  if (passed) *passed = c.passed ? 1 : 0;
  if (detail) *detail = c.detail.c_str();
  return ETS_OK;
}

int ets_report_all_passed(const ets_report* report) {
  if (!report) return 0;
  for (const auto& c : report->checks) {
    if (!c.passed) return 0;
  }
  return 1;
}

void ets_report_destroy(ets_report* report) { delete report; }

}  // extern "C"
