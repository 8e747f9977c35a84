// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ets/phase_space.hpp"

namespace ets {

struct Branch {
  Complex coeff;
  std::vector<Amplitude> amps;
};

/// Unnormalized superposition of multimode coherent products.
///
/// Each mode has a reference amplitude a_m: |a_m> is the logical 0 and
/// |-a_m> the logical 1 that effective rotations act on.
class BranchSuperposition {
 public:
  /// Throws InvalidArgument on an empty list, ragged amplitude vectors or a
  /// non-positive Gram norm. References default to the first branch's
  /// amplitudes turned into the half plane Re > 0 (Im > 0 on the axis).
  explicit BranchSuperposition(std::vector<Branch> branches);

  /// Explicit references; every amplitude on mode m must be +a_m or -a_m.
  BranchSuperposition(std::vector<Branch> branches, std::vector<Amplitude> references);

  std::size_t num_modes() const noexcept { return modes_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  const std::vector<Amplitude>& references() const noexcept { return refs_; }

  /// sum_ij c_i conj(c_j) prod_m <amps_j^m|amps_i^m>
  double gram_norm() const;

 private:
  struct Raw {};
  BranchSuperposition(std::vector<Branch> branches, std::vector<Amplitude> references, Raw);
  friend BranchSuperposition make_unchecked(std::vector<Branch>, std::vector<Amplitude>);

  std::size_t modes_ = 0;
  std::vector<Branch> branches_;
  std::vector<Amplitude> refs_;
};

/// Same container without the positivity check. Intermediate results of
/// formal rotations can have vanishing norm.
BranchSuperposition make_unchecked(std::vector<Branch> branches, std::vector<Amplitude> references);

BranchSuperposition ghz_branches(std::span<const Amplitude> amps);
BranchSuperposition w_branches(Amplitude amp);
BranchSuperposition cluster_branches(std::span<const Amplitude> amps);

enum class Family {
  Ghz3BeamSplitter,
  Ghz3Conditional,
  W3,
  Ghz4Conditional,
  Cluster4Conditional,
  Cluster4CrossKerr,
  Ghz3Kerr,
};

inline constexpr Family kAllFamilies[] = {
    Family::Ghz3BeamSplitter,  Family::Ghz3Conditional,   Family::W3,       Family::Ghz4Conditional,
    Family::Cluster4Conditional, Family::Cluster4CrossKerr, Family::Ghz3Kerr,
};

/// CLI names: ghz3-bs, ghz3-cond, w3, ghz4-cond, cluster4-cond, cluster4-kerr, ghz3-kerr.
std::string_view family_name(Family f) noexcept;
Family parse_family(std::string_view name);

/// P-function parameters of one complex integration variable.
struct ThermalVariable {
  double V = 1.0;
  double d = 0.0;
};

/// Gaussian weights plus the real linear map from variables to mode slots.
struct ThermalMixtureSpec {
  std::vector<ThermalVariable> variables;
  std::vector<std::vector<double>> amplitude_map;  // [slot][variable]

  std::size_t num_slots() const noexcept { return amplitude_map.size(); }
  bool degenerate() const noexcept;  // every V == 1

  /// Throws InvalidArgument when V < 1, d < 0 or the map shape is wrong.
  void validate() const;

  std::vector<Complex> slot_amplitudes(std::span<const Complex> vars) const;
};

/// Branch structure in the formal +/- basis: branch b puts signs[b][m] * a_m on mode m.
struct BranchTemplate {
  std::vector<Complex> coeffs;
  std::vector<std::vector<int>> signs;

  std::size_t num_modes() const noexcept { return signs.empty() ? 0 : signs.front().size(); }
  BranchSuperposition instantiate(std::span<const Complex> slot_amps) const;

  /// Dense coefficient vector over the 2^M sign patterns; bit m set means -a_m.
  std::vector<Complex> pattern_coefficients() const;
};

struct FamilyInstance {
  Family family;
  ThermalMixtureSpec mixture;
  BranchTemplate templ;
  double transmittivity_t1 = 0.0;  // recorded only; 0 when not applicable
  double transmittivity_t2 = 0.0;
};

FamilyInstance make_family(Family family, double V, double d);

}  // namespace ets
