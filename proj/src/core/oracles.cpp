// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/oracles.hpp"

#include <cmath>
#include <numbers>

#include "ets/error.hpp"

namespace ets {

double erf_argument(double V, double d, double eta) {
  return std::numbers::sqrt2 * d * eta / std::sqrt(1.0 + eta * eta * (V - 1.0));
}

double averaged_overlap(double V, double d) { return std::exp(-2.0 * d * d / V) / V; }

double ghz_correlation_closed(double V, double d, double eta, std::span<const double> phases) {
  const double e = std::erf(erf_argument(V, d, eta));
  const double n = static_cast<double>(phases.size());
  double sum = 0.0;
  for (double p : phases) sum += p;
  return std::cos(sum) * std::pow(e, n) / (1.0 + std::pow(averaged_overlap(V, d), n));
}

double ghz2_correlation_closed(double V, double d, double eta, double gamma, double delta, double nu) {
  const double p[] = {gamma, delta, nu};
  return ghz_correlation_closed(V, d, eta, p);
}

double svetlichny_ghz2_closed(double V, double d, double eta, const AngleSet& angles) {
  const auto& spec = inequality_spec(InequalityName::Svetlichny3);
  check_arity(spec, angles);
  for (const auto& party : angles) {
    for (const auto& r : party) {
      if (std::abs(std::remainder(r.theta - 0.5 * std::numbers::pi, 2.0 * std::numbers::pi)) > 1e-12) {
        raise(ErrorCode::Unsupported, "closed Svetlichny form needs theta = pi/2 settings");
      }
    }
  }
  double s = 0.0;
  for (const auto& t : spec.terms) {
    double p[3];
    for (std::size_t k = 0; k < 3; ++k) p[k] = angles[k][static_cast<std::size_t>(t.setting[k])].phase;
    s += t.sign * ghz_correlation_closed(V, d, eta, p);
  }
  return std::abs(s);
}

double w_correlation_closed(double V, double d, double theta, double phi, double mu) {
  const double bracket = std::cos(theta) * std::cos(phi) * std::cos(mu) + 2.0 * std::cos(theta + phi + mu);
  const double e = std::erf(std::numbers::sqrt2 * d / std::sqrt(V));
  return bracket * e * e * e / 3.0;
}

double sasa_closed(double V, double d, double eta) {
  const double e = std::erf(erf_argument(V, d, eta));
  return 2.0 * e * e * e * (1.0 + e);
}

double spin_ghz_correlation(double theta, double phi, double mu) { return std::cos(theta + phi + mu); }

double qubit_correlation(const BranchTemplate& templ, const std::vector<PartySetting>& settings) {
  const std::size_t M = templ.num_modes();
  if (settings.size() != M) raise(ErrorCode::InvalidArgument, "one setting per mode is required");
  const std::vector<Complex> psi = templ.pattern_coefficients();
  const std::size_t dim = psi.size();

  // Apply each single-qubit observable in turn; bit m set is |1>.
  std::vector<Complex> phi = psi;
  for (std::size_t m = 0; m < M; ++m) {
    if (settings[m].ignored()) continue;
    const auto& r = settings[m].rotation();
    const double c = std::cos(r.theta), s = std::sin(r.theta);
    const Complex o00(-c), o11(c);
    const Complex o01 = s * Complex(std::cos(r.phase), -std::sin(r.phase));  // <0|O|1>
    const Complex o10 = std::conj(o01);
    const std::size_t bit = std::size_t{1} << m;
    for (std::size_t I = 0; I < dim; ++I) {
      if (I & bit) continue;
      const Complex a0 = phi[I], a1 = phi[I | bit];
      phi[I] = o00 * a0 + o01 * a1;
      phi[I | bit] = o10 * a0 + o11 * a1;
    }
  }
  Complex num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t I = 0; I < dim; ++I) {
    num += std::conj(psi[I]) * phi[I];
    den += std::norm(psi[I]);
  }
  return num.real() / den;
}

double spin_functional(const InequalitySpec& spec, const AngleSet& angles, const BranchTemplate& templ) {
  return evaluate(spec, angles, [&](const std::vector<PartySetting>& s) {
           return Estimate{qubit_correlation(templ, s), 0.0};
         }).value;
}

}  // namespace ets
