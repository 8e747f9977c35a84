// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// Effective rotations and dichotomized homodyne statistics of branch states.
///
/// A rotation acts on the formal pair (|a>, |-a>) of one mode as
///   |a>  -> sin(t/2) |a> + e^{i p} cos(t/2) |-a>
///   |-a> -> e^{-i p} cos(t/2) |a> - sin(t/2) |-a>
/// so coefficient vectors transform with the transpose. In the formal qubit
/// picture the measured observable is -cos(t) Z + sin(t)(cos(p) X + sin(p) Y).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "ets/states.hpp"

namespace ets {

struct EffectiveRotation {
  double theta = 0.0;
  double phase = 0.0;

  /// Both angles reduced into [0, 2pi).
  EffectiveRotation normalized() const noexcept;

  /// 2x2 map in row convention, m[r][c].
  std::array<std::array<Complex, 2>, 2> matrix() const noexcept;
};

class PartySetting {
 public:
  static PartySetting rotate(double theta, double phase) { return PartySetting(EffectiveRotation{theta, phase}); }
  static PartySetting rotate(EffectiveRotation r) { return PartySetting(r); }
  static PartySetting ignore() { return PartySetting(); }

  bool ignored() const noexcept { return ignored_; }
  const EffectiveRotation& rotation() const;

 private:
  PartySetting() : ignored_(true) {}
  explicit PartySetting(EffectiveRotation r) : ignored_(false), rot_(r) {}

  bool ignored_;
  EffectiveRotation rot_{};
};

enum class Pauli { X, Y, Z };

/// sigma_x -> (pi/2, 0), sigma_y -> (pi/2, pi/2), sigma_z -> (pi, 0).
EffectiveRotation pauli_rotation(Pauli p) noexcept;

/// Rotation whose readout is the eigenbasis of cos(v) sigma_z + sin(v) sigma_x,
/// theta = 2 arctan[(cos v - 1)/sin v] with the removable point v = 0 filled by
/// continuity (theta = 0).
EffectiveRotation tilted_rotation(double v) noexcept;

struct DetectorModel {
  double eta = 1.0;

  void validate() const;
};

/// Denominator used to turn the unnormalized pattern weights into probabilities.
enum class Normalization {
  Prepared,  // Gram norm of the state before the effective rotations
  Outcomes,  // sum over all sign patterns after rotation
};

std::string_view normalization_name(Normalization n) noexcept;
Normalization parse_normalization(std::string_view name);

/// Requires every amplitude on `mode` to be +a or -a for one reference a.
/// Identical amplitude vectors are merged after the map.
BranchSuperposition apply_rotation(const BranchSuperposition& state, std::size_t mode, EffectiveRotation rot);

/// Bit k of the key is set when the k-th measured mode landed on the negative
/// half line. Ignored modes are traced over.
using SignProbabilities = std::map<std::uint32_t, double>;

SignProbabilities joint_sign_probabilities(const BranchSuperposition& state,
                                           const std::vector<PartySetting>& settings,
                                           const DetectorModel& det,
                                           Normalization norm = Normalization::Prepared);

/// Expectation of the product of measured signs.
double correlation(const BranchSuperposition& state, const std::vector<PartySetting>& settings,
                   const DetectorModel& det, Normalization norm = Normalization::Prepared);

/// Lossy half-line kernel: a beam splitter of amplitude transmission eta
/// followed by an ideal homodyne. Tracing the environment leaves
///   I^eta_h(a, b) = <sqrt(1-eta^2) b | sqrt(1-eta^2) a> I_h(eta a, eta b),
/// which reproduces d -> eta d, V -> 1 + eta^2 (V - 1) on thermal mixtures.
HalfLinePair apply_inefficiency(const DetectorModel& det, Amplitude alpha, Amplitude beta);

}  // namespace ets
