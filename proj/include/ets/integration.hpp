// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ets/measurement.hpp"
#include "ets/states.hpp"

namespace ets {

enum class QuadratureMethod { GaussHermite, MonteCarlo, Auto };

std::string_view method_name(QuadratureMethod m) noexcept;  // gh, mc, auto
QuadratureMethod parse_method(std::string_view name);

struct QuadratureConfig {
  int nodes_per_axis = 40;
  std::uint64_t mc_samples = 200000;
  std::uint64_t mc_seed = 20260101;
  QuadratureMethod method = QuadratureMethod::Auto;
  double rel_tol = 1e-9;
  Normalization normalization = Normalization::Prepared;

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double err = 0.0;
};

/// Nodes and weights for a one-dimensional rule; weights sum to 1 when the
/// rule integrates against a probability density.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Physicists' Gauss-Hermite rule for weight exp(-t^2), 1 <= n <= 200.
const Rule1D& gauss_hermite(int n);

/// Expectation rule for N(mean, sigma^2) built from gauss_hermite(n).
Rule1D normal_gauss_hermite(double mean, double sigma, int n);

/// Composite Gauss-Legendre rule for N(mean, sigma^2) over mean +- 10 sigma,
/// with panels of width `fine` around the origin out to +-`reach` and sigma/2
/// elsewhere. `points` is 10 or 20.
Rule1D normal_composite(double mean, double sigma, double fine, double reach, int points);

/// Integral of f against the product of P-function weights of all variables.
///
/// GaussHermite refines nodes_per_axis by doubling up to 200 and throws
/// NonConvergence if the last two levels differ by more than
/// rel_tol * |value| + 1e-14. MonteCarlo returns the batch-means standard
/// error. Auto uses the tensor rule for up to two variables.
Estimate thermal_average(const ThermalMixtureSpec& spec, const std::function<double(std::span<const Complex>)>& f,
                         const QuadratureConfig& cfg);

/// Thermal averages of the per-mode kernel tensors of one family at fixed
/// (V, d, eta), cached per measured-mode mask.
///
/// Every family drives each mode by exactly one integration variable, and in
/// the {+a, -a} basis each kernel entry factorizes into a function of Re(a)
/// times a function of Im(a). The averaged tensor for a mask is therefore a
/// product of one-dimensional expectations, and any measurement setting
/// reduces to a quadratic form in the rotated branch coefficients.
class MixtureKernel {
 public:
  MixtureKernel(const FamilyInstance& family, DetectorModel det, QuadratureConfig cfg);

  std::size_t num_modes() const noexcept { return modes_; }

  /// Mixture-level correlation with error estimate.
  Estimate correlation(const std::vector<PartySetting>& settings) const;

  /// Probabilities of the measured sign patterns, keyed like joint_sign_probabilities.
  SignProbabilities sign_probabilities(const std::vector<PartySetting>& settings) const;

  /// Rule actually used: "delta", "gh<n>", "composite" or "mc".
  const std::string& rule_label() const noexcept { return rule_label_; }

 private:
  using Tensor = std::vector<Complex>;  // dim x dim, row = ket pattern

  struct AxisRules {
    std::vector<Rule1D> x;  // one per replica
    std::vector<Rule1D> y;
  };

  const std::vector<Tensor>& tensors(std::uint32_t mask) const;
  std::vector<Tensor> build(std::uint32_t mask, const std::vector<AxisRules>& rules) const;
  std::vector<AxisRules> rules_gh(int coarse, int fine) const;
  std::vector<AxisRules> rules_composite() const;
  std::vector<AxisRules> rules_mc() const;
  bool converged(const std::vector<Tensor>& t) const;
  std::pair<double, double> feature_widths(std::size_t v) const;  // (narrowest, widest) in Re/Im units
  bool gh_resolves(int n) const;
  Estimate combine(const std::vector<double>& replicas) const;
  std::vector<double> form(const std::vector<Tensor>& t, const std::vector<Complex>& c) const;
  std::vector<Complex> rotated(const std::vector<PartySetting>& settings) const;
  std::vector<double> norms(const std::vector<PartySetting>& settings) const;

  std::size_t modes_ = 0;
  std::size_t dim_ = 0;
  DetectorModel det_;
  QuadratureConfig cfg_;
  std::vector<ThermalVariable> vars_;
  std::vector<std::size_t> mode_var_;    // driving variable per mode
  std::vector<double> mode_scale_;       // amplitude scale per mode
  std::vector<Complex> coeffs_;          // unrotated pattern coefficients
  std::vector<AxisRules> rules_;         // per variable
  bool mc_ = false;
  std::string rule_label_;

  mutable std::mutex mu_;
  mutable std::map<std::uint32_t, std::shared_ptr<const std::vector<Tensor>>> cache_;
};

/// One-shot helper: build the kernel for (family, V, d, eta) and evaluate.
Estimate converged_correlation(Family family, double V, double d, const std::vector<PartySetting>& settings,
                               const DetectorModel& det, const QuadratureConfig& cfg);

}  // namespace ets
