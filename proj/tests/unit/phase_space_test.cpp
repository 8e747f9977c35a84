// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ets/error.hpp"
#include "ets/phase_space.hpp"

namespace ets {
namespace {

// mpmath, 40 digits.
TEST(Faddeeva, PureImaginaryUnit) {
  const Complex w = faddeeva({0.0, 1.0});
  EXPECT_NEAR(w.real(), 0.42758357615580700441, 1e-15);
  EXPECT_NEAR(w.imag(), 0.0, 1e-15);
}

TEST(Faddeeva, OriginIsOne) { EXPECT_EQ(faddeeva({0.0, 0.0}), Complex(1.0, 0.0)); }

TEST(Faddeeva, MirrorSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-15.0, 15.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(u(rng), std::abs(u(rng)));
    const Complex a = faddeeva(z), b = faddeeva({-z.real(), z.imag()});
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-14 * std::abs(a));
  }
}

TEST(Faddeeva, ReflectionIntoLowerHalfPlane) {
  const Complex z(1.3, 0.4);
  const Complex lhs = faddeeva(-z) + faddeeva(z);
  EXPECT_LT(std::abs(lhs - 2.0 * std::exp(-z * z)), 1e-14);
}

TEST(Faddeeva, ContinuousAcrossRegionBoundaries) {
  for (double r : {0.5, 12.0}) {
    for (double t = 0.05; t < 3.1; t += 0.3) {
      const Complex in = std::polar(r * (1 - 1e-12), t), out = std::polar(r * (1 + 1e-12), t);
      EXPECT_LT(std::abs(faddeeva(in) - faddeeva(out)), 1e-10 * std::abs(faddeeva(in))) << r << " " << t;
    }
  }
}

TEST(Faddeeva, RejectsNonFiniteAndHuge) {
  EXPECT_THROW(faddeeva({std::numeric_limits<double>::quiet_NaN(), 0.0}), Error);
  EXPECT_THROW(faddeeva({2e6, 1.0}), Error);
}

TEST(Faddeeva, LowerHalfPlaneOverflowIsReported) {
  try {
    faddeeva({0.0, -40.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(ErfComplex, MatchesHighPrecision) {
  struct {
    Complex z, ref;
  } cases[] = {
      {{0.5, 0.5}, {0.64261291485482052832, 0.45788139443519221584}},
      {{-1.2, 0.3}, {-0.93922443349092299926, 0.075548923393186985479}},
      {{2.0, -1.0}, {1.0036063427256517509, 0.011259006028815025076}},
      {{0.01, 3.0}, {91.375616296956883163, 1627.2525771673356135}},
  };
  for (const auto& c : cases) EXPECT_LT(std::abs(erf_complex(c.z) - c.ref), 1e-13 * std::abs(c.ref)) << c.z;
}

TEST(ErfComplex, RealAxisAgreesWithStd) {
  for (double x = -5.0; x <= 5.0; x += 0.37) EXPECT_NEAR(erf_complex({x, 0.0}).real(), std::erf(x), 1e-15);
}

TEST(Amplitude, ValidatesRange) {
  EXPECT_NO_THROW(Amplitude(kAmplitudeMax, 0.0));
  try {
    Amplitude a(kAmplitudeMax * 1.01, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmplitudeOutOfRange);
  }
  EXPECT_THROW(Amplitude(std::numeric_limits<double>::infinity(), 0.0), Error);
}

TEST(CoherentOverlap, NormalizedAndHermitian) {
  const Amplitude a(0.3, -1.1), b(-0.7, 0.4);
  EXPECT_NEAR(std::abs(coherent_overlap(a, a)), 1.0, 1e-15);
  EXPECT_LT(std::abs(coherent_overlap(a, b) - std::conj(coherent_overlap(b, a))), 1e-16);
  EXPECT_NEAR(std::norm(coherent_overlap(a, b)), std::exp(-std::norm(a.value() - b.value())), 1e-15);
}

TEST(QuadratureAmplitude, SquareIntegratesToOne) {
  const Amplitude a(0.8, 0.6);
  double sum = 0.0;
  const double h = 1e-3;
  for (double x = -12.0; x <= 12.0; x += h) sum += std::norm(quadrature_amplitude(x, a)) * h;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

// mpmath quad of <x|alpha><beta|x> over x > 0.
TEST(HalfLine, MatchesHighPrecisionIntegrals) {
  struct {
    Amplitude a, b;
    Complex plus;
  } cases[] = {
      {{0.7, 0.2}, {-0.3, 0.5}, {0.32628386489322277883, -0.21255378267943972196}},
      {{2.0, 0.0}, {2.0, 0.0}, {0.99996832875816688008, 0.0}},
      {{-1.5, 1.0}, {0.4, -2.0}, {-0.0030474419173879830313, 0.011569099399108748035}},
  };
  for (const auto& c : cases) {
    const auto h = halfline_integrals(c.a, c.b);
    EXPECT_LT(std::abs(h.plus - c.plus), 1e-14);
    EXPECT_EQ(halfline_interference_integral(c.a, c.b, HalfLine::Plus), h.plus);
  }
}

TEST(HalfLine, CompletenessOverRandomPairs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const Amplitude a(u(rng), u(rng)), b(u(rng), u(rng));
    const auto h = halfline_integrals(a, b);
    EXPECT_LT(std::abs(h.plus + h.minus - coherent_overlap(a, b)), 1e-12);
  }
}

TEST(HalfLine, ParitySwapsHalves) {
  const Amplitude a(0.4, 0.9), b(-1.2, 0.3);
  const auto h = halfline_integrals(a, b), r = halfline_integrals(-a, -b);
  EXPECT_LT(std::abs(h.plus - r.minus), 1e-15);
  EXPECT_LT(std::abs(h.minus - r.plus), 1e-15);
}

TEST(HalfLine, LargeSeparationStaysFinite) {
  const auto h = halfline_integrals(Amplitude(900.0, 0.0), Amplitude(-900.0, 0.0));
  EXPECT_TRUE(std::isfinite(h.plus.real()) && std::isfinite(h.minus.real()));
  EXPECT_LT(std::abs(h.plus), 1e-300);
}

}  // namespace
}  // namespace ets
