// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cmath>
#include <numbers>

#include "ets/error.hpp"
#include "ets/phase_space.hpp"

namespace ets {
namespace {

constexpr double kInvSqrtPi = 0.564189583547756286948079451561;  // 1/sqrt(pi)

constexpr int kWeidemanN = 40;
constexpr double kSeriesRadius = 0.5;
constexpr double kFarFieldRadius = 12.0;
constexpr int kContinuedFractionDepth = 16;

// Coefficients of Weideman's expansion
//   w(z) = 2 p(Z) / (L - iz)^2 + 1/sqrt(pi) / (L - iz),  Z = (L + iz)/(L - iz),
// obtained from the DFT of exp(-t^2)(L^2 + t^2) sampled at t = L tan(theta/2).
struct WeidemanTable {
  double L = 0.0;
  std::array<double, kWeidemanN> coeff{};  // highest power first

  WeidemanTable() {
    constexpr int M = 2 * kWeidemanN;
    constexpr int M2 = 2 * M;
    L = std::sqrt(kWeidemanN / std::numbers::sqrt2);
    // f[0] = 0, f[j] for k = -M+1 .. M-1 at positions j = k + M.
    std::array<long double, M2> f{};
    for (int k = -M + 1; k <= M - 1; ++k) {
      const long double theta = static_cast<long double>(k) * std::numbers::pi_v<long double> / M;
      const long double t = L * std::tan(theta / 2);
      f[static_cast<std::size_t>(k + M)] = std::exp(-t * t) * (L * L + t * t);
    }
    // fftshift followed by the real part of the forward DFT.
    std::array<long double, M2> shifted{};
    for (int j = 0; j < M2; ++j) shifted[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>((j + M) % M2)];
    for (int n = 1; n <= kWeidemanN; ++n) {
      long double acc = 0;
      for (int j = 0; j < M2; ++j) {
        acc += shifted[static_cast<std::size_t>(j)] *
               std::cos(2 * std::numbers::pi_v<long double> * n * j / M2);
      }
      coeff[static_cast<std::size_t>(kWeidemanN - n)] = static_cast<double>(acc / M2);
    }
  }
};

const WeidemanTable& weideman_table() {
  static const WeidemanTable table;
  return table;
}

Complex w_series(Complex z) {
  // w(z) = sum_n (iz)^n / Gamma(n/2 + 1)
  const Complex iz(-z.imag(), z.real());
  Complex term(1.0, 0.0);  // (iz)^n
  Complex sum(0.0, 0.0);
  for (int n = 0; n < 40; ++n) {
    sum += term / std::tgamma(0.5 * n + 1.0);
    term *= iz;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

Complex w_weideman(Complex z) {
  const auto& tab = weideman_table();
  const Complex iz(-z.imag(), z.real());
  const Complex denom = tab.L - iz;
  const Complex Z = (tab.L + iz) / denom;
  Complex p(0.0, 0.0);
  for (double a : tab.coeff) p = p * Z + a;
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

Complex w_continued_fraction(Complex z) {
  Complex t = z;
  for (int k = kContinuedFractionDepth; k >= 1; --k) t = z - (0.5 * k) / t;
  return Complex(0.0, kInvSqrtPi) / t;
}

Complex w_upper(Complex z) {
  const double r = std::abs(z);
  if (r < kSeriesRadius) return w_series(z);
  if (r < kFarFieldRadius) return w_weideman(z);
  return w_continued_fraction(z);
}

}  // namespace

Complex faddeeva(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorCode::InvalidArgument, "faddeeva: non-finite argument");
  }
  if (std::abs(z) > 1e6) raise(ErrorCode::InvalidArgument, "faddeeva: |z| > 1e6");
  if (z.imag() >= 0.0) return w_upper(z);
  // w(z) = 2 exp(-z^2) - w(-z)
  const Complex z2 = z * z;
  if (-z2.real() > 700.0) raise(ErrorCode::Overflow, "faddeeva: exp(-z^2) overflows");
  return 2.0 * std::exp(-z2) - w_upper(-z);
}

Complex erf_complex(Complex z) {
  // erf(z) = 1 - exp(-z^2) w(iz); for Re z < 0 use oddness so w stays in the
  // upper half plane.
  if (z.real() < 0.0) return -erf_complex(-z);
  const Complex iz(-z.imag(), z.real());
  const Complex z2 = z * z;
  if (-z2.real() > 700.0) raise(ErrorCode::Overflow, "erf_complex: exp(-z^2) overflows");
  return 1.0 - std::exp(-z2) * faddeeva(iz);
}

}  // namespace ets
