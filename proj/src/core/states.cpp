// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/states.hpp"

#include <cmath>
#include <string>

#include "ets/error.hpp"

namespace ets {
namespace {

void check_shape(const std::vector<Branch>& branches) {
  if (branches.empty()) raise(ErrorCode::InvalidArgument, "branch list is empty");
  const std::size_t m = branches.front().amps.size();
  if (m == 0) raise(ErrorCode::InvalidArgument, "branches have no modes");
  for (const auto& b : branches) {
    if (b.amps.size() != m) raise(ErrorCode::InvalidArgument, "branches disagree on mode count");
  }
}

bool same(Complex a, Complex b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)); }

std::vector<Amplitude> default_references(const std::vector<Branch>& branches) {
  check_shape(branches);
  std::vector<Amplitude> refs = branches.front().amps;
  for (auto& r : refs) {
    if (r.re() < 0.0 || (r.re() == 0.0 && r.im() < 0.0)) r = -r;
  }
  return refs;
}

std::vector<Amplitude> signed_amps(std::span<const Amplitude> amps, int sign) {
  std::vector<Amplitude> out(amps.begin(), amps.end());
  if (sign < 0) {
    for (auto& a : out) a = -a;
  }
  return out;
}

}  // namespace

BranchSuperposition::BranchSuperposition(std::vector<Branch> branches, std::vector<Amplitude> references, Raw)
    : modes_(0), branches_(std::move(branches)), refs_(std::move(references)) {
  check_shape(branches_);
  modes_ = branches_.front().amps.size();
  if (refs_.size() != modes_) raise(ErrorCode::InvalidArgument, "one reference amplitude per mode is required");
  for (const auto& b : branches_) {
    for (std::size_t m = 0; m < modes_; ++m) {
      const Complex a = b.amps[m].value(), r = refs_[m].value();
      if (!same(a, r) && !same(a, -r)) {
        raise(ErrorCode::InvalidArgument, "mode amplitudes must be +/- the mode reference");
      }
    }
  }
}

BranchSuperposition::BranchSuperposition(std::vector<Branch> branches, std::vector<Amplitude> references)
    : BranchSuperposition(std::move(branches), std::move(references), Raw{}) {
  const double n = gram_norm();
  if (!(n > 0.0)) raise(ErrorCode::InvalidArgument, "Gram norm is not positive");
}

BranchSuperposition::BranchSuperposition(std::vector<Branch> branches)
    : BranchSuperposition(branches, default_references(branches)) {}

BranchSuperposition make_unchecked(std::vector<Branch> branches, std::vector<Amplitude> references) {
  return BranchSuperposition(std::move(branches), std::move(references), BranchSuperposition::Raw{});
}

double BranchSuperposition::gram_norm() const {
  Complex acc(0.0, 0.0);
  for (const auto& bi : branches_) {
    for (const auto& bj : branches_) {
      Complex prod = bi.coeff * std::conj(bj.coeff);
      for (std::size_t m = 0; m < modes_; ++m) prod *= coherent_overlap(bi.amps[m], bj.amps[m]);
      acc += prod;
    }
  }
  return acc.real();
}

BranchSuperposition ghz_branches(std::span<const Amplitude> amps) {
  if (amps.size() != 3 && amps.size() != 4) {
    raise(ErrorCode::InvalidArgument, "ghz_branches expects 3 or 4 amplitudes");
  }
  return BranchSuperposition({{Complex(1.0), signed_amps(amps, +1)}, {Complex(1.0), signed_amps(amps, -1)}},
                             signed_amps(amps, +1));
}

BranchSuperposition w_branches(Amplitude amp) {
  std::vector<Branch> out;
  for (int flip = 0; flip < 3; ++flip) {
    std::vector<Amplitude> a(3, amp);
    a[static_cast<std::size_t>(flip)] = -amp;
    out.push_back({Complex(1.0), std::move(a)});
  }
  return BranchSuperposition(std::move(out), std::vector<Amplitude>(3, amp));
}

BranchSuperposition cluster_branches(std::span<const Amplitude> amps) {
  if (amps.size() != 4) raise(ErrorCode::InvalidArgument, "cluster_branches expects 4 amplitudes");
  const Amplitude a = amps[0], b = amps[1], c = amps[2], d = amps[3];
  return BranchSuperposition({
      {Complex(0.5), {a, b, c, d}},
      {Complex(0.5), {a, b, -c, -d}},
      {Complex(0.5), {-a, -b, c, d}},
      {Complex(-0.5), {-a, -b, -c, -d}},
  }, {a, b, c, d});
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Ghz3BeamSplitter: return "ghz3-bs";
    case Family::Ghz3Conditional: return "ghz3-cond";
    case Family::W3: return "w3";
    case Family::Ghz4Conditional: return "ghz4-cond";
    case Family::Cluster4Conditional: return "cluster4-cond";
    case Family::Cluster4CrossKerr: return "cluster4-kerr";
    case Family::Ghz3Kerr: return "ghz3-kerr";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  raise(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

bool ThermalMixtureSpec::degenerate() const noexcept {
  for (const auto& v : variables) {
    if (v.V != 1.0) return false;
  }
  return true;
}

void ThermalMixtureSpec::validate() const {
  if (variables.empty()) raise(ErrorCode::InvalidArgument, "mixture has no variables");
  for (const auto& v : variables) {
    if (!std::isfinite(v.V) || v.V < 1.0) raise(ErrorCode::InvalidArgument, "V must be >= 1");
    if (!std::isfinite(v.d) || v.d < 0.0) raise(ErrorCode::InvalidArgument, "d must be >= 0");
    if (v.d > kAmplitudeMax) raise(ErrorCode::AmplitudeOutOfRange, "d exceeds the amplitude limit");
  }
  if (amplitude_map.empty()) raise(ErrorCode::InvalidArgument, "amplitude map is empty");
  for (const auto& row : amplitude_map) {
    if (row.size() != variables.size()) raise(ErrorCode::InvalidArgument, "amplitude map has wrong width");
  }
}

std::vector<Complex> ThermalMixtureSpec::slot_amplitudes(std::span<const Complex> vars) const {
  if (vars.size() != variables.size()) raise(ErrorCode::InvalidArgument, "variable count mismatch");
  std::vector<Complex> out(amplitude_map.size());
  for (std::size_t s = 0; s < amplitude_map.size(); ++s) {
    Complex acc(0.0, 0.0);
    for (std::size_t v = 0; v < vars.size(); ++v) acc += amplitude_map[s][v] * vars[v];
    out[s] = acc;
  }
  return out;
}

BranchSuperposition BranchTemplate::instantiate(std::span<const Complex> slot_amps) const {
  const std::size_t m = num_modes();
  if (slot_amps.size() != m) raise(ErrorCode::InvalidArgument, "slot count mismatch");
  std::vector<Branch> out;
  out.reserve(coeffs.size());
  for (std::size_t b = 0; b < coeffs.size(); ++b) {
    std::vector<Amplitude> amps;
    amps.reserve(m);
    for (std::size_t k = 0; k < m; ++k) amps.emplace_back(static_cast<double>(signs[b][k]) * slot_amps[k]);
    out.push_back({coeffs[b], std::move(amps)});
  }
  std::vector<Amplitude> refs(slot_amps.begin(), slot_amps.end());
  return make_unchecked(std::move(out), std::move(refs));
}

std::vector<Complex> BranchTemplate::pattern_coefficients() const {
  const std::size_t m = num_modes();
  std::vector<Complex> c(std::size_t{1} << m, Complex(0.0, 0.0));
  for (std::size_t b = 0; b < coeffs.size(); ++b) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (signs[b][k] < 0) idx |= std::size_t{1} << k;
    }
    c[idx] += coeffs[b];
  }
  return c;
}

FamilyInstance make_family(Family family, double V, double d) {
  FamilyInstance fi{family, {}, {}};
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  auto independent = [&](std::size_t n) {
    fi.mixture.variables.assign(n, {V, d});
    fi.mixture.amplitude_map.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) fi.mixture.amplitude_map[i][i] = 1.0;
  };
  auto shared = [&](std::size_t n, double scale) {
    fi.mixture.variables.assign(1, {V, d});
    fi.mixture.amplitude_map.assign(n, std::vector<double>(1, scale));
  };
  auto ghz = [&](std::size_t n, Complex second) {
    fi.templ.coeffs = {Complex(1.0), second};
    fi.templ.signs = {std::vector<int>(n, 1), std::vector<int>(n, -1)};
  };
  auto cluster = [&] {
    fi.templ.coeffs = {Complex(0.5), Complex(0.5), Complex(0.5), Complex(-0.5)};
    fi.templ.signs = {{1, 1, 1, 1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}};
  };

  switch (family) {
    case Family::Ghz3BeamSplitter:
      shared(3, r3);
      ghz(3, Complex(1.0));
      fi.transmittivity_t1 = std::sqrt(2.0 / 3.0);
      fi.transmittivity_t2 = r2;
      break;
    case Family::Ghz3Conditional:
      independent(3);
      ghz(3, Complex(1.0));
      break;
    case Family::W3:
      shared(3, 1.0);
      fi.templ.coeffs = {Complex(1.0), Complex(1.0), Complex(1.0)};
      fi.templ.signs = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
      break;
    case Family::Ghz4Conditional:
      independent(4);
      ghz(4, Complex(1.0));
      break;
    case Family::Cluster4Conditional:
      independent(4);
      cluster();
      break;
    case Family::Cluster4CrossKerr:
      fi.mixture.variables.assign(2, {V, d});
      fi.mixture.amplitude_map = {{r2, 0.0}, {r2, 0.0}, {0.0, r2}, {0.0, r2}};
      cluster();
      break;
    case Family::Ghz3Kerr:
      shared(3, r3);
      ghz(3, Complex(0.0, 1.0));
      break;
  }
  fi.mixture.validate();
  return fi;
}

}  // namespace ets
