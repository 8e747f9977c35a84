// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 success, 1 invalid invocation or
// I/O error, 2 a grid point failed or a validation check did not pass.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ets/ets.h"

namespace {

constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct Quadrature {
  int nodes = 40;
  long long mc_samples = 200000;
  unsigned long long seed = 20260101;
  std::string method = "auto";
  double rel_tol = 1e-9;
  std::string normalize = "prepared";

  void attach(CLI::App* app) {
    app->add_option("--nodes", nodes, "Gauss-Hermite nodes per axis")->capture_default_str();
    app->add_option("--mc-samples", mc_samples, "Monte Carlo sample count")->capture_default_str();
    app->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    app->add_option("--method", method, "Quadrature: auto, gh or mc")->capture_default_str();
    app->add_option("--rel-tol", rel_tol, "Refinement tolerance")->capture_default_str();
    app->add_option("--normalize", normalize, "Normalization: prepared or outcomes")->capture_default_str();
  }
};

struct Output {
  std::string path = "-";
  std::string format = "csv";

  void attach(CLI::App* app) {
    app->add_option("--out", path, "Output file, - for stdout")->capture_default_str();
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  }
};

int report(ets_status s, const char* what) {
  std::fprintf(stderr, "ets: %s: %s (%s)\n", what, ets_last_error(), ets_status_string(s));
  return kUsage;
}

// Plan setup failures are caller mistakes.
#define TRY_SETUP(call, what)                 \
  do {                                        \
    const ets_status s_ = (call);             \
    if (s_ != ETS_OK) return report(s_, what); \
  } while (0)

struct PlanGuard {
  ets_plan* p = nullptr;
  ~PlanGuard() { ets_plan_destroy(p); }
};

struct ResultGuard {
  ets_result* r = nullptr;
  ~ResultGuard() { ets_result_destroy(r); }
};

int apply_quadrature(ets_plan* plan, const Quadrature& q) {
  TRY_SETUP(ets_plan_set_quadrature(plan, q.nodes, q.mc_samples, q.seed, q.method.c_str(), q.rel_tol), "quadrature");
  TRY_SETUP(ets_plan_set_normalization(plan, q.normalize.c_str()), "normalization");
  return 0;
}

int finish(ets_result* result, const Output& out) {
  const ets_status s = ets_result_write(result, out.path.c_str(), out.format.c_str());
  if (s != ETS_OK) return report(s, "write");
  const std::size_t n = ets_result_row_count(result);
  for (std::size_t i = 0; i < n; ++i) {
    if (const char* e = ets_result_row_error(result, i)) {
      ets_row row{};
      ets_result_row(result, i, &row);
      std::fprintf(stderr, "ets: point V=%g d=%g eta=%g failed: %s\n", row.V, row.d, row.eta, e);
    }
  }
  return ets_result_any_failed(result) ? kFailed : 0;
}

struct PointArgs {
  std::string family, inequality;
  std::string V = "1", d = "0", eta = "1";
};

void attach_point(CLI::App* app, PointArgs& a) {
  app->add_option("--family", a.family, "ghz3-bs, ghz3-cond, w3, ghz4-cond, cluster4-cond, cluster4-kerr, ghz3-kerr")
      ->required();
  app->add_option("--inequality", a.inequality, "mermin3, svetlichny3, svetlichny4, sasa, wwzb4")->required();
  app->add_option("--V", a.V, "Thermal variance grid: value, list a,b,c or range a:b:n")->capture_default_str();
  app->add_option("--d", a.d, "Displacement grid")->capture_default_str();
  app->add_option("--eta", a.eta, "Detector efficiency grid")->capture_default_str();
}

int make_plan(const PointArgs& a, const Quadrature& q, PlanGuard& g) {
  TRY_SETUP(ets_plan_create(a.family.c_str(), a.inequality.c_str(), &g.p), "plan");
  TRY_SETUP(ets_plan_set_grid_text(g.p, a.V.c_str(), a.d.c_str(), a.eta.c_str()), "grid");
  return apply_quadrature(g.p, q);
}

void print_check(int id, const char* name, int passed, const char* detail, void*) {
  std::printf("[%s] %2d %s: %s\n", passed ? "PASS" : "FAIL", id, name, detail);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled thermal state simulator"};
  app.set_version_flag("--version", std::string(ets_version()));
  app.require_subcommand(1);

  PointArgs scan_args;
  Quadrature scan_q;
  Output scan_out;
  std::string angles = "canonical";
  std::vector<double> explicit_angles;
  int restarts = 20;
  bool closed_form = false;
  auto* scan = app.add_subcommand("scan", "Evaluate a functional over a (V, d, eta) grid");
  attach_point(scan, scan_args);
  scan->add_option("--angles", angles, "canonical, optimize or explicit")
      ->check(CLI::IsMember({"canonical", "optimize", "explicit"}))
      ->capture_default_str();
  scan->add_option("--explicit", explicit_angles, "theta,phase pairs party by party (with --angles explicit)")
      ->delimiter(',');
  scan->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str();
  scan->add_flag("--closed-form", closed_form, "Use the analytic formula where one exists");
  scan_q.attach(scan);
  scan_out.attach(scan);

  std::string figure_name;
  Quadrature fig_q;
  Output fig_out;
  auto* figure = app.add_subcommand("figure", "Emit the data behind a figure preset");
  figure->add_option("name", figure_name, "fig2 ... fig7")->required();
  fig_q.attach(figure);
  fig_out.attach(figure);

  bool mutate = false;
  Quadrature val_q;
  auto* validate = app.add_subcommand("validate", "Run the oracle-vs-numeric acceptance checks");
  validate->add_flag("--mutate", mutate, "Flip one sign per functional before the bound check");
  val_q.attach(validate);

  PointArgs opt_args;
  Quadrature opt_q;
  Output opt_out;
  int opt_restarts = 20;
  auto* optimize = app.add_subcommand("optimize", "Maximize a functional over measurement angles");
  attach_point(optimize, opt_args);
  optimize->add_option("--restarts", opt_restarts, "Optimizer restarts")->capture_default_str();
  opt_q.attach(optimize);
  opt_out.attach(optimize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "ets: %s\n\n%s", e.what(), app.help().c_str());
    return kUsage;
  }

  if (*scan) {
    PlanGuard g;
    if (int rc = make_plan(scan_args, scan_q, g)) return rc;
    if (angles == "explicit") {
      if (explicit_angles.empty()) {
        std::fprintf(stderr, "ets: --angles explicit needs --explicit\n");
        return kUsage;
      }
      if (explicit_angles.size() % 2 != 0) {
        std::fprintf(stderr, "ets: --explicit takes theta,phase pairs\n");
        return kUsage;
      }
      TRY_SETUP(ets_plan_set_explicit_angles(g.p, explicit_angles.data(), explicit_angles.size() / 2), "angles");
    } else {
      TRY_SETUP(ets_plan_set_angle_mode(g.p, angles.c_str()), "angles");
    }
    TRY_SETUP(ets_plan_set_restarts(g.p, restarts), "restarts");
    TRY_SETUP(ets_plan_set_closed_form(g.p, closed_form ? 1 : 0), "evaluator");
    TRY_SETUP(ets_plan_validate(g.p), "plan");
    ResultGuard r;
    TRY_SETUP(ets_run_sweep(g.p, &r.r), "scan");
    return finish(r.r, scan_out);
  }

  if (*figure) {
    PlanGuard g;
    TRY_SETUP(ets_plan_create("ghz3-cond", "svetlichny3", &g.p), "plan");
    if (int rc = apply_quadrature(g.p, fig_q)) return rc;
    ResultGuard r;
    const ets_status s = ets_run_figure(figure_name.c_str(), g.p, &r.r);
    if (s != ETS_OK) {
      report(s, "figure");
      std::fprintf(stderr, "known figures:");
      for (std::size_t i = 0; i < ets_figure_count(); ++i) std::fprintf(stderr, " %s", ets_figure_name(i));
      std::fprintf(stderr, "\n");
      return kUsage;
    }
    return finish(r.r, fig_out);
  }

  if (*validate) {
    PlanGuard g;
    TRY_SETUP(ets_plan_create("ghz3-cond", "svetlichny3", &g.p), "plan");
    if (int rc = apply_quadrature(g.p, val_q)) return rc;
    ets_report* rep = nullptr;
    const ets_status s = ets_validate(mutate ? 1 : 0, g.p, print_check, nullptr, &rep);
    if (s != ETS_OK) return report(s, "validate");
    const bool ok = ets_report_all_passed(rep) != 0;
    std::printf("%s\n", ok ? "all checks passed" : "some checks failed");
    ets_report_destroy(rep);
    return ok ? 0 : kFailed;
  }

  PlanGuard g;
  if (int rc = make_plan(opt_args, opt_q, g)) return rc;
  TRY_SETUP(ets_plan_set_angle_mode(g.p, "optimize"), "angles");
  TRY_SETUP(ets_plan_set_restarts(g.p, opt_restarts), "restarts");
  TRY_SETUP(ets_plan_validate(g.p), "plan");
  ResultGuard r;
  TRY_SETUP(ets_run_sweep(g.p, &r.r), "optimize");
  const int rc = finish(r.r, opt_out);
  // Angles go to stderr so stdout stays a clean table.
  const std::size_t n = ets_result_row_count(r.r);
  for (std::size_t i = 0; i < n; ++i) {
    ets_row row{};
    ets_result_row(r.r, i, &row);
    if (row.failed) continue;
    std::size_t count = 0;
    ets_result_row_angles(r.r, i, nullptr, 0, &count);
    std::vector<double> pairs(2 * count);
    ets_result_row_angles(r.r, i, pairs.data(), count, &count);
    std::fprintf(stderr, "V=%g d=%g eta=%g value=%.12g angles:", row.V, row.d, row.eta, row.value);
    for (std::size_t k = 0; k < count; ++k) std::fprintf(stderr, " (%.12g, %.12g)", pairs[2 * k], pairs[2 * k + 1]);
    std::fprintf(stderr, "\n");
  }
  return rc;
}
