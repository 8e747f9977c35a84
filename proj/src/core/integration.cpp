// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/integration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ets/error.hpp"

namespace ets {
namespace {

constexpr int kMaxNodes = 200;
constexpr int kBatches = 32;
constexpr double kMaxTensorPoints = 5e7;

double sigma_of(double V) { return std::sqrt(0.25 * (V - 1.0)); }

Rule1D delta_rule(double at) { return Rule1D{{at}, {1.0}}; }

// (coarse, fine) node pairs visited by doubling refinement.
std::vector<std::pair<int, int>> refinement_levels(int n) {
  std::vector<std::pair<int, int>> out;
  int c = std::min(n, kMaxNodes / 2);
  if (n >= kMaxNodes) c = kMaxNodes / 2;
  while (true) {
    const int f = std::min(2 * c, kMaxNodes);
    out.emplace_back(c, f);
    if (f == kMaxNodes) break;
    c = f;
  }
  return out;
}

std::vector<Rule1D> mc_axis(std::mt19937_64& rng, double mean, double sigma, std::uint64_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = mean + sigma * normal(rng);
  std::vector<Rule1D> out;
  out.push_back(Rule1D{xs, std::vector<double>(n, 1.0 / static_cast<double>(n))});
  const std::uint64_t per = n / kBatches;
  for (int b = 0; b < kBatches; ++b) {
    const auto first = xs.begin() + static_cast<std::ptrdiff_t>(b * per);
    out.push_back(Rule1D{std::vector<double>(first, first + static_cast<std::ptrdiff_t>(per)),
                         std::vector<double>(per, 1.0 / static_cast<double>(per))});
  }
  return out;
}

double batch_error(const std::vector<double>& r) {
  // r[0] is the full-sample value, r[1..] the batch values.
  const std::size_t B = r.size() - 1;
  double mean = 0.0;
  for (std::size_t b = 1; b <= B; ++b) mean += r[b];
  mean /= static_cast<double>(B);
  double ss = 0.0;
  for (std::size_t b = 1; b <= B; ++b) ss += (r[b] - mean) * (r[b] - mean);
  return std::sqrt(ss / static_cast<double>(B - 1) / static_cast<double>(B));
}

using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 x_factor(bool measured, double a, double eta) {
  const double e = std::exp(-2.0 * a * a);
  if (!measured) return {{{1.0, e}, {e, 1.0}}};
  const double s = std::erf(std::numbers::sqrt2 * eta * a);
  return {{{s, e}, {e, -s}}};
}

Mat2 y_factor(bool measured, double b, double eta) {
  if (!measured) {
    const double g = std::exp(-2.0 * b * b);
    return {{{1.0, g}, {g, 1.0}}};
  }
  // exp(-2 b^2) erfi(sqrt2 eta b) written without the growing exponential.
  const double u = std::numbers::sqrt2 * eta * b;
  const double h = std::exp(-2.0 * (1.0 - eta * eta) * b * b) * faddeeva(Complex(u, 0.0)).imag();
  return {{{1.0, Complex(0.0, h)}, {Complex(0.0, -h), 1.0}}};
}

}  // namespace

std::string_view method_name(QuadratureMethod m) noexcept {
  switch (m) {
    case QuadratureMethod::GaussHermite: return "gh";
    case QuadratureMethod::MonteCarlo: return "mc";
    case QuadratureMethod::Auto: return "auto";
  }
  return "auto";
}

QuadratureMethod parse_method(std::string_view name) {
  if (name == "gh") return QuadratureMethod::GaussHermite;
  if (name == "mc") return QuadratureMethod::MonteCarlo;
  if (name == "auto") return QuadratureMethod::Auto;
  raise(ErrorCode::InvalidArgument, "unknown quadrature method '" + std::string(name) + "'");
}

void QuadratureConfig::validate() const {
  if (nodes_per_axis < 1 || nodes_per_axis > kMaxNodes) {
    raise(ErrorCode::InvalidArgument, "nodes_per_axis must lie in [1, 200]");
  }
  if (!(rel_tol > 0.0)) raise(ErrorCode::InvalidArgument, "rel_tol must be positive");
  if (mc_samples < static_cast<std::uint64_t>(2 * kBatches)) {
    raise(ErrorCode::InvalidArgument, "mc_samples must be at least 64");
  }
}

Estimate thermal_average(const ThermalMixtureSpec& spec, const std::function<double(std::span<const Complex>)>& f,
                         const QuadratureConfig& cfg) {
  spec.validate();
  cfg.validate();
  const std::size_t nv = spec.variables.size();
  std::vector<Complex> point(nv);

  if (spec.degenerate()) {
    for (std::size_t v = 0; v < nv; ++v) point[v] = spec.variables[v].d;
    return {f(point), 0.0};
  }

  const bool mc = cfg.method == QuadratureMethod::MonteCarlo || (cfg.method == QuadratureMethod::Auto && nv > 2);
  if (mc) {
    std::mt19937_64 rng(cfg.mc_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::uint64_t per = cfg.mc_samples / kBatches;
    std::vector<double> r(1, 0.0);
    for (int b = 0; b < kBatches; ++b) {
      double acc = 0.0;
      for (std::uint64_t k = 0; k < per; ++k) {
        for (std::size_t v = 0; v < nv; ++v) {
          const double s = sigma_of(spec.variables[v].V);
          const double x = spec.variables[v].d + s * normal(rng);
          const double y = s * normal(rng);
          point[v] = Complex(x, y);
        }
        acc += f(point);
      }
      r.push_back(acc / static_cast<double>(per));
      r[0] += r.back() / kBatches;
    }
    return {r[0], batch_error(r)};
  }

  auto tensor = [&](int n) {
    std::vector<std::vector<std::pair<Complex, double>>> axes(nv);
    double total = 1.0;
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& var = spec.variables[v];
      if (var.V == 1.0) {
        axes[v].push_back({Complex(var.d, 0.0), 1.0});
      } else {
        const double s = sigma_of(var.V);
        const Rule1D rx = normal_gauss_hermite(var.d, s, n);
        const Rule1D ry = normal_gauss_hermite(0.0, s, n);
        for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
          for (std::size_t j = 0; j < ry.nodes.size(); ++j) {
            axes[v].push_back({Complex(rx.nodes[i], ry.nodes[j]), rx.weights[i] * ry.weights[j]});
          }
        }
      }
      total *= static_cast<double>(axes[v].size());
    }
    if (total > kMaxTensorPoints) raise(ErrorCode::Unsupported, "tensor rule too large; use Monte Carlo");
    std::vector<std::size_t> idx(nv, 0);
    double acc = 0.0;
    while (true) {
      double w = 1.0;
      for (std::size_t v = 0; v < nv; ++v) {
        point[v] = axes[v][idx[v]].first;
        w *= axes[v][idx[v]].second;
      }
      acc += w * f(point);
      std::size_t v = 0;
      while (v < nv && ++idx[v] == axes[v].size()) idx[v++] = 0;
      if (v == nv) break;
    }
    return acc;
  };

  double coarse = 0.0, fine = 0.0;
  bool first = true;
  for (const auto& [c, fn] : refinement_levels(cfg.nodes_per_axis)) {
    coarse = first ? tensor(c) : fine;
    fine = tensor(fn);
    first = false;
    if (std::abs(fine - coarse) <= cfg.rel_tol * std::abs(fine) + 1e-14) return {fine, std::abs(fine - coarse)};
  }
  raise(ErrorCode::NonConvergence, "Gauss-Hermite refinement did not reach rel_tol");
}

MixtureKernel::MixtureKernel(const FamilyInstance& family, DetectorModel det, QuadratureConfig cfg)
    : det_(det), cfg_(cfg) {
  family.mixture.validate();
  det_.validate();
  cfg_.validate();
  modes_ = family.templ.num_modes();
  if (modes_ == 0 || modes_ > 8) raise(ErrorCode::Unsupported, "kernel supports 1..8 modes");
  if (family.mixture.num_slots() != modes_) raise(ErrorCode::InvalidArgument, "slot count mismatch");
  dim_ = std::size_t{1} << modes_;
  vars_ = family.mixture.variables;
  for (std::size_t m = 0; m < modes_; ++m) {
    const auto& row = family.mixture.amplitude_map[m];
    std::size_t which = row.size();
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (row[v] == 0.0) continue;
      if (which != row.size()) raise(ErrorCode::Unsupported, "each mode must be driven by one variable");
      which = v;
    }
    if (which == row.size()) raise(ErrorCode::Unsupported, "mode without a driving variable");
    mode_var_.push_back(which);
    mode_scale_.push_back(row[which]);
  }
  coeffs_ = family.templ.pattern_coefficients();

  const std::uint32_t all = static_cast<std::uint32_t>(dim_ - 1);
  auto adopt = [&](std::vector<AxisRules> rules, const std::string& label) {
    auto t_all = std::make_shared<const std::vector<Tensor>>(build(all, rules));
    auto t_none = std::make_shared<const std::vector<Tensor>>(build(0, rules));
    if (!mc_ && !(converged(*t_all) && converged(*t_none))) return false;
    rules_ = std::move(rules);
    rule_label_ = label;
    cache_[all] = t_all;
    cache_[0] = t_none;
    return true;
  };

  bool delta = true;
  for (const auto& v : vars_) delta = delta && v.V == 1.0;
  if (delta) {
    std::vector<AxisRules> rules(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      rules[v].x = {delta_rule(vars_[v].d)};
      rules[v].y = {delta_rule(0.0)};
    }
    adopt(std::move(rules), "delta");
    return;
  }
  if (cfg_.method == QuadratureMethod::MonteCarlo) {
    mc_ = true;
    adopt(rules_mc(), "mc");
    return;
  }
  const bool forced = cfg_.method == QuadratureMethod::GaussHermite;
  for (const auto& [c, f] : refinement_levels(cfg_.nodes_per_axis)) {
    // Two GH levels can agree while both stepping over the narrow kernel
    // features at the origin, so Auto also demands that the central node
    // spacing resolves them.
    if (!forced && !gh_resolves(f)) continue;
    if (adopt(rules_gh(c, f), "gh" + std::to_string(f))) return;
  }
  if (forced) {
    raise(ErrorCode::NonConvergence, "Gauss-Hermite kernel did not converge at 200 nodes");
  }
  if (!adopt(rules_composite(), "composite")) {
    raise(ErrorCode::NonConvergence, "composite kernel quadrature did not converge");
  }
}

std::pair<double, double> MixtureKernel::feature_widths(std::size_t v) const {
  double k = 0.0;
  for (std::size_t m = 0; m < modes_; ++m) {
    if (mode_var_[m] == v) k = std::max(k, std::abs(mode_scale_[m]));
  }
  const double w_overlap = 1.0 / (2.0 * k);
  const double w_erf = 1.0 / (std::numbers::sqrt2 * det_.eta * k);
  return {std::min(w_overlap, w_erf), std::max(w_overlap, w_erf)};
}

bool MixtureKernel::gh_resolves(int n) const {
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const auto& var = vars_[v];
    if (var.V == 1.0) continue;
    const double s = sigma_of(var.V);
    if (var.d > 8.0 * s + feature_widths(v).second) continue;  // features sit in a negligible tail
    if (std::numbers::pi * s / std::sqrt(static_cast<double>(n)) > feature_widths(v).first) return false;
  }
  return true;
}

std::vector<MixtureKernel::AxisRules> MixtureKernel::rules_gh(int coarse, int fine) const {
  std::vector<AxisRules> rules(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const auto& var = vars_[v];
    if (var.V == 1.0) {
      rules[v].x = {delta_rule(var.d)};
      rules[v].y = {delta_rule(0.0)};
      continue;
    }
    const double s = sigma_of(var.V);
    rules[v].x = {normal_gauss_hermite(var.d, s, fine), normal_gauss_hermite(var.d, s, coarse)};
    rules[v].y = {normal_gauss_hermite(0.0, s, fine), normal_gauss_hermite(0.0, s, coarse)};
  }
  return rules;
}

std::vector<MixtureKernel::AxisRules> MixtureKernel::rules_composite() const {
  std::vector<AxisRules> rules(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const auto& var = vars_[v];
    if (var.V == 1.0) {
      rules[v].x = {delta_rule(var.d)};
      rules[v].y = {delta_rule(0.0)};
      continue;
    }
    const auto [narrow, wide] = feature_widths(v);
    const double fine = 0.5 * narrow;
    const double reach = 8.0 * wide;
    const double s = sigma_of(var.V);
    rules[v].x = {normal_composite(var.d, s, fine, reach, 20), normal_composite(var.d, s, fine, reach, 10)};
    rules[v].y = {normal_composite(0.0, s, fine, reach, 20), normal_composite(0.0, s, fine, reach, 10)};
  }
  return rules;
}

std::vector<MixtureKernel::AxisRules> MixtureKernel::rules_mc() const {
  std::vector<AxisRules> rules(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    const auto& var = vars_[v];
    std::seed_seq seq{cfg_.mc_seed, static_cast<std::uint64_t>(v)};
    std::mt19937_64 rng(seq);
    if (var.V == 1.0) {
      rules[v].x.assign(kBatches + 1, delta_rule(var.d));
      rules[v].y.assign(kBatches + 1, delta_rule(0.0));
      continue;
    }
    const double s = sigma_of(var.V);
    rules[v].x = mc_axis(rng, var.d, s, cfg_.mc_samples);
    rules[v].y = mc_axis(rng, 0.0, s, cfg_.mc_samples);
  }
  return rules;
}

std::vector<MixtureKernel::Tensor> MixtureKernel::build(std::uint32_t mask, const std::vector<AxisRules>& rules) const {
  const std::size_t replicas = rules.front().x.size();
  std::vector<Tensor> out(replicas, Tensor(dim_ * dim_, Complex(1.0, 0.0)));

  for (std::size_t v = 0; v < vars_.size(); ++v) {
    std::vector<std::size_t> group;
    for (std::size_t m = 0; m < modes_; ++m) {
      if (mode_var_[m] == v) group.push_back(m);
    }
    if (group.empty()) continue;
    const std::size_t G = group.size();
    const std::size_t L = std::size_t{1} << G;

    // Local index of every global pattern within this group.
    std::vector<std::size_t> local(dim_, 0);
    for (std::size_t I = 0; I < dim_; ++I) {
      for (std::size_t q = 0; q < G; ++q) {
        if ((I >> group[q]) & 1u) local[I] |= std::size_t{1} << q;
      }
    }

    for (std::size_t r = 0; r < replicas; ++r) {
      auto average = [&](const Rule1D& rule, bool imag_axis) {
        std::vector<Complex> acc(L * L, Complex(0.0, 0.0));
        std::vector<Mat2> fac(G);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
          for (std::size_t q = 0; q < G; ++q) {
            const std::size_t m = group[q];
            const bool measured = (mask >> m) & 1u;
            const double a = mode_scale_[m] * rule.nodes[k];
            fac[q] = imag_axis ? y_factor(measured, a, det_.eta) : x_factor(measured, a, det_.eta);
          }
          const double w = rule.weights[k];
          for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t j = 0; j < L; ++j) {
              Complex p = w;
              for (std::size_t q = 0; q < G; ++q) p *= fac[q][(i >> q) & 1u][(j >> q) & 1u];
              acc[i * L + j] += p;
            }
          }
        }
        return acc;
      };
      const auto ex = average(rules[v].x[r], false);
      const auto ey = average(rules[v].y[r], true);
      Tensor& T = out[r];
      for (std::size_t I = 0; I < dim_; ++I) {
        for (std::size_t J = 0; J < dim_; ++J) {
          const std::size_t e = local[I] * L + local[J];
          T[I * dim_ + J] *= ex[e] * ey[e];
        }
      }
    }
  }
  return out;
}

bool MixtureKernel::converged(const std::vector<Tensor>& t) const {
  if (t.size() < 2) return true;
  double scale = 0.0, diff = 0.0;
  for (std::size_t e = 0; e < t[0].size(); ++e) {
    scale = std::max(scale, std::abs(t[0][e]));
    diff = std::max(diff, std::abs(t[0][e] - t[1][e]));
  }
  return diff <= cfg_.rel_tol * std::max(scale, 1.0);
}

const std::vector<MixtureKernel::Tensor>& MixtureKernel::tensors(std::uint32_t mask) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(mask);
  if (it == cache_.end()) {
    it = cache_.emplace(mask, std::make_shared<const std::vector<Tensor>>(build(mask, rules_))).first;
  }
  return *it->second;
}

std::vector<double> MixtureKernel::form(const std::vector<Tensor>& t, const std::vector<Complex>& c) const {
  std::vector<double> out;
  out.reserve(t.size());
  for (const auto& T : t) {
    Complex acc(0.0, 0.0);
    for (std::size_t I = 0; I < dim_; ++I) {
      if (c[I] == Complex(0.0, 0.0)) continue;
      Complex row(0.0, 0.0);
      for (std::size_t J = 0; J < dim_; ++J) row += T[I * dim_ + J] * std::conj(c[J]);
      acc += c[I] * row;
    }
    out.push_back(acc.real());
  }
  return out;
}

std::vector<Complex> MixtureKernel::rotated(const std::vector<PartySetting>& settings) const {
  if (settings.size() != modes_) raise(ErrorCode::InvalidArgument, "one setting per mode is required");
  std::vector<Complex> c = coeffs_;
  for (std::size_t m = 0; m < modes_; ++m) {
    if (settings[m].ignored()) continue;
    const auto R = settings[m].rotation().matrix();
    const std::size_t bit = std::size_t{1} << m;
    for (std::size_t I = 0; I < dim_; ++I) {
      if (I & bit) continue;
      const Complex c0 = c[I], c1 = c[I | bit];
      c[I] = R[0][0] * c0 + R[1][0] * c1;
      c[I | bit] = R[0][1] * c0 + R[1][1] * c1;
    }
  }
  return c;
}

std::vector<double> MixtureKernel::norms(const std::vector<PartySetting>& settings) const {
  const auto& t0 = tensors(0);
  auto n = cfg_.normalization == Normalization::Prepared ? form(t0, coeffs_) : form(t0, rotated(settings));
  for (double x : n) {
    if (!(x > 0.0)) raise(ErrorCode::InconsistentState, "non-positive total norm");
  }
  return n;
}

Estimate MixtureKernel::combine(const std::vector<double>& r) const {
  if (mc_) return {r[0], batch_error(r)};
  if (r.size() == 2) return {r[0], std::abs(r[0] - r[1])};
  return {r[0], 0.0};
}

Estimate MixtureKernel::correlation(const std::vector<PartySetting>& settings) const {
  const auto c = rotated(settings);
  std::uint32_t mask = 0;
  for (std::size_t m = 0; m < modes_; ++m) {
    if (!settings[m].ignored()) mask |= 1u << m;
  }
  const auto num = form(tensors(mask), c);
  const auto den = norms(settings);
  std::vector<double> r(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) r[i] = num[i] / den[i];
  return combine(r);
}

SignProbabilities MixtureKernel::sign_probabilities(const std::vector<PartySetting>& settings) const {
  const auto c = rotated(settings);
  std::vector<std::size_t> measured;
  for (std::size_t m = 0; m < modes_; ++m) {
    if (!settings[m].ignored()) measured.push_back(m);
  }
  const std::size_t K = measured.size();
  const double den = norms(settings)[0];

  // prod_m (G + s_m D)/2 expanded over subsets of measured modes.
  std::vector<double> sub(std::size_t{1} << K);
  for (std::uint32_t A = 0; A < sub.size(); ++A) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < K; ++k) {
      if ((A >> k) & 1u) mask |= 1u << measured[k];
    }
    sub[A] = form(tensors(mask), c)[0];
  }
  SignProbabilities out;
  for (std::uint32_t s = 0; s < sub.size(); ++s) {
    double p = 0.0;
    for (std::uint32_t A = 0; A < sub.size(); ++A) p += (std::popcount(A & s) % 2 ? -sub[A] : sub[A]);
    out[s] = std::ldexp(p, -static_cast<int>(K)) / den;
  }
  return out;
}

Estimate converged_correlation(Family family, double V, double d, const std::vector<PartySetting>& settings,
                               const DetectorModel& det, const QuadratureConfig& cfg) {
  return MixtureKernel(make_family(family, V, d), det, cfg).correlation(settings);
}

}  // namespace ets
