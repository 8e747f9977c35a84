// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/measurement.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "ets/error.hpp"

namespace ets {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x) noexcept {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool same(Complex a, Complex b) noexcept {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a));
}

}  // namespace

EffectiveRotation EffectiveRotation::normalized() const noexcept { return {wrap(theta), wrap(phase)}; }

std::array<std::array<Complex, 2>, 2> EffectiveRotation::matrix() const noexcept {
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const Complex e = std::polar(1.0, phase);
  return {{{Complex(s), e * c}, {std::conj(e) * c, Complex(-s)}}};
}

const EffectiveRotation& PartySetting::rotation() const {
  if (ignored_) raise(ErrorCode::InvalidArgument, "ignored party has no rotation");
  return rot_;
}

EffectiveRotation pauli_rotation(Pauli p) noexcept {
  switch (p) {
    case Pauli::X: return {0.5 * std::numbers::pi, 0.0};
    case Pauli::Y: return {0.5 * std::numbers::pi, 0.5 * std::numbers::pi};
    case Pauli::Z: return {std::numbers::pi, 0.0};
  }
  return {};
}

EffectiveRotation tilted_rotation(double v) noexcept {
  const double s = std::sin(v);
  if (std::abs(s) < 1e-300) {
    // (cos v - 1)/sin v -> -tan(v/2): 0 at v = 0, -infinity at v = pi.
    return EffectiveRotation{std::cos(v) > 0.0 ? 0.0 : -std::numbers::pi, 0.0}.normalized();
  }
  return EffectiveRotation{2.0 * std::atan((std::cos(v) - 1.0) / s), 0.0}.normalized();
}

void DetectorModel::validate() const {
  if (!(eta > 0.0 && eta <= 1.0)) raise(ErrorCode::InvalidArgument, "eta must lie in (0, 1]");
}

std::string_view normalization_name(Normalization n) noexcept {
  return n == Normalization::Prepared ? "prepared" : "outcomes";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "prepared") return Normalization::Prepared;
  if (name == "outcomes") return Normalization::Outcomes;
  raise(ErrorCode::InvalidArgument, "unknown normalization '" + std::string(name) + "'");
}

BranchSuperposition apply_rotation(const BranchSuperposition& state, std::size_t mode, EffectiveRotation rot) {
  if (mode >= state.num_modes()) raise(ErrorCode::InvalidArgument, "mode index out of range");
  const auto& in = state.branches();
  const Amplitude plus = state.references()[mode];
  const Complex ref = plus.value();
  const auto R = rot.matrix();
  const Amplitude minus = -plus;

  std::vector<Branch> out;
  auto add = [&out](Complex coeff, std::vector<Amplitude> amps) {
    for (auto& b : out) {
      if (b.amps == amps) {
        b.coeff += coeff;
        return;
      }
    }
    out.push_back({coeff, std::move(amps)});
  };

  for (const auto& b : in) {
    const Complex a = b.amps[mode].value();
    int row;
    if (same(a, ref)) {
      row = 0;
    } else if (same(a, -ref)) {
      row = 1;
    } else {
      raise(ErrorCode::InvalidArgument, "amplitudes on the rotated mode are not a +/- pair");
    }
    auto to_plus = b.amps;
    to_plus[mode] = plus;
    auto to_minus = b.amps;
    to_minus[mode] = minus;
    add(b.coeff * R[row][0], std::move(to_plus));
    add(b.coeff * R[row][1], std::move(to_minus));
  }
  std::erase_if(out, [](const Branch& b) { return b.coeff == Complex(0.0, 0.0); });
  if (out.empty()) out.push_back({Complex(0.0, 0.0), in.front().amps});
  return make_unchecked(std::move(out), state.references());
}

HalfLinePair apply_inefficiency(const DetectorModel& det, Amplitude alpha, Amplitude beta) {
  det.validate();
  if (det.eta == 1.0) return halfline_integrals(alpha, beta);
  const double lost = std::sqrt(1.0 - det.eta * det.eta);
  const Complex env = coherent_overlap(alpha.scaled(lost), beta.scaled(lost));
  const HalfLinePair p = halfline_integrals(alpha.scaled(det.eta), beta.scaled(det.eta));
  return {env * p.plus, env * p.minus};
}

SignProbabilities joint_sign_probabilities(const BranchSuperposition& state,
                                           const std::vector<PartySetting>& settings,
                                           const DetectorModel& det, Normalization norm) {
  det.validate();
  const std::size_t M = state.num_modes();
  if (settings.size() != M) raise(ErrorCode::InvalidArgument, "one setting per mode is required");

  BranchSuperposition rotated = state;
  std::vector<std::size_t> measured;
  for (std::size_t m = 0; m < M; ++m) {
    if (settings[m].ignored()) continue;
    measured.push_back(m);
    rotated = apply_rotation(rotated, m, settings[m].rotation());
  }
  if (measured.size() > 16) raise(ErrorCode::Unsupported, "too many measured modes");

  const auto& br = rotated.branches();
  const std::size_t B = br.size();
  const std::size_t K = measured.size();

  // Per branch pair: coefficient product times the traced-mode overlaps, and
  // the per-measured-mode lossy half-line pairs.
  std::vector<Complex> weight(B * B);
  std::vector<HalfLinePair> kernel(B * B * K);
  for (std::size_t i = 0; i < B; ++i) {
    for (std::size_t j = 0; j < B; ++j) {
      Complex w = br[i].coeff * std::conj(br[j].coeff);
      std::size_t k = 0;
      for (std::size_t m = 0; m < M; ++m) {
        if (settings[m].ignored()) {
          w *= coherent_overlap(br[i].amps[m], br[j].amps[m]);
        } else {
          kernel[(i * B + j) * K + k++] = apply_inefficiency(det, br[i].amps[m], br[j].amps[m]);
        }
      }
      weight[i * B + j] = w;
    }
  }

  SignProbabilities out;
  double total = 0.0;
  for (std::uint32_t s = 0; s < (1u << K); ++s) {
    Complex acc(0.0, 0.0);
    for (std::size_t ij = 0; ij < B * B; ++ij) {
      Complex term = weight[ij];
      for (std::size_t k = 0; k < K; ++k) {
        const HalfLinePair& p = kernel[ij * K + k];
        term *= ((s >> k) & 1u) ? p.minus : p.plus;
      }
      acc += term;
    }
    out[s] = acc.real();
    total += acc.real();
  }

  const double denom = norm == Normalization::Prepared ? state.gram_norm() : total;
  if (!(denom > 0.0)) raise(ErrorCode::InconsistentState, "non-positive total norm");
  for (auto& [s, p] : out) p /= denom;
  return out;
}

double correlation(const BranchSuperposition& state, const std::vector<PartySetting>& settings,
                   const DetectorModel& det, Normalization norm) {
  const auto probs = joint_sign_probabilities(state, settings, det, norm);
  double c = 0.0;
  for (const auto& [s, p] : probs) c += (std::popcount(s) % 2 ? -p : p);
  return c;
}

}  // namespace ets
