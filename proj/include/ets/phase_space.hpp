// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// Coherent-state kernels in the in-phase quadrature representation.
///
/// Convention: x is the eigenvalue of (a + a^dagger)/sqrt(2), so a coherent
/// state with real amplitude d has quadrature mean sqrt(2) d and vacuum
/// variance 1/2:
///
///   <x|alpha> = pi^(-1/4) exp(-x^2/2 + sqrt(2) x alpha - alpha^2/2 - |alpha|^2/2)

#pragma once

#include <complex>

namespace ets {

using Complex = std::complex<double>;

/// Largest coherent amplitude magnitude accepted anywhere in the library.
inline constexpr double kAmplitudeMax = 1e3;

/// Coherent-state label. Always finite with magnitude <= kAmplitudeMax.
class Amplitude {
 public:
  constexpr Amplitude() = default;
  Amplitude(double re, double im = 0.0);  // NOLINT(google-explicit-constructor)
  explicit Amplitude(Complex z);

  Complex value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }

  Amplitude operator-() const noexcept { return Amplitude(-z_, Unchecked{}); }
  Amplitude scaled(double factor) const { return Amplitude(z_ * factor); }

  friend bool operator==(const Amplitude& a, const Amplitude& b) noexcept {
    return a.z_ == b.z_;
  }

 private:
  struct Unchecked {};
  Amplitude(Complex z, Unchecked) noexcept : z_(z) {}

  Complex z_{0.0, 0.0};
};

enum class HalfLine { Plus, Minus };

inline int sign_of(HalfLine h) noexcept { return h == HalfLine::Plus ? 1 : -1; }

/// <beta|alpha> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(beta) alpha).
Complex coherent_overlap(Amplitude alpha, Amplitude beta);

/// <x|alpha> in the convention above.
Complex quadrature_amplitude(double x, Amplitude alpha);

/// Both half-line integrals of <x|alpha><beta|x>.
struct HalfLinePair {
  Complex plus;
  Complex minus;
};

/// I_+ + I_- equals coherent_overlap(alpha, beta) by construction; the
/// smaller-magnitude side is evaluated directly and the other one obtained by
/// completeness, so only upper-half-plane Faddeeva evaluations are needed.
HalfLinePair halfline_integrals(Amplitude alpha, Amplitude beta);

/// I_h(alpha, beta) = integral over the half line h of <x|alpha><beta|x> dx.
Complex halfline_interference_integral(Amplitude alpha, Amplitude beta, HalfLine h);

/// Faddeeva function w(z) = exp(-z^2) erfc(-i z).
///
/// Region-switched: Maclaurin series for |z| < 0.5, Weideman's rational
/// expansion (N = 40) for |z| < 12, Laplace continued fraction beyond, all in
/// the upper half plane; the lower half plane uses w(z) = 2 exp(-z^2) - w(-z).
/// Throws ErrorCode::Overflow when exp(-z^2) is not representable and
/// ErrorCode::InvalidArgument for |z| > 1e6 or non-finite input.
Complex faddeeva(Complex z);

/// erf(z) for complex z, via faddeeva. Used by oracles and tests.
Complex erf_complex(Complex z);

}  // namespace ets
