// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "ets/error.hpp"

namespace ets {
namespace {

Complex checked(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorCode::AmplitudeOutOfRange, "amplitude is not finite");
  }
  if (std::abs(z) > kAmplitudeMax) {
    raise(ErrorCode::AmplitudeOutOfRange, "amplitude magnitude exceeds 1e3");
  }
  return z;
}

}  // namespace

Amplitude::Amplitude(double re, double im) : z_(checked(Complex(re, im))) {}
Amplitude::Amplitude(Complex z) : z_(checked(z)) {}

Complex coherent_overlap(Amplitude alpha, Amplitude beta) {
  const Complex a = alpha.value();
  const Complex b = beta.value();
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(b) * a);
}

Complex quadrature_amplitude(double x, Amplitude alpha) {
  const Complex a = alpha.value();
  static const double norm = std::pow(std::numbers::pi, -0.25);
  return norm * std::exp(-0.5 * x * x + std::numbers::sqrt2 * x * a - 0.5 * a * a - 0.5 * std::norm(a));
}

HalfLinePair halfline_integrals(Amplitude alpha, Amplitude beta) {
  const Complex a = alpha.value();
  const Complex bc = std::conj(beta.value());
  const Complex s = (a + bc) / std::numbers::sqrt2;
  // |E| = exp(-(Re a)^2 - (Re b)^2) <= 1.
  const Complex E = std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(bc) - 0.5 * a * a - 0.5 * bc * bc);
  const Complex overlap = coherent_overlap(alpha, beta);
  const Complex is(-s.imag(), s.real());
  HalfLinePair out;
  if (s.real() >= 0.0) {
    out.minus = 0.5 * E * faddeeva(is);
    out.plus = overlap - out.minus;
  } else {
    out.plus = 0.5 * E * faddeeva(-is);
    out.minus = overlap - out.plus;
  }
  return out;
}

Complex halfline_interference_integral(Amplitude alpha, Amplitude beta, HalfLine h) {
  const HalfLinePair p = halfline_integrals(alpha, beta);
  return h == HalfLine::Plus ? p.plus : p.minus;
}

}  // namespace ets
