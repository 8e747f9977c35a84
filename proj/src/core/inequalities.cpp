// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/inequalities.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "ets/error.hpp"

namespace ets {
namespace {

constexpr double kPi = std::numbers::pi;

// "+001" -> sign +1, settings {0, 0, 1}
Term term(const char* code) {
  Term t;
  t.sign = code[0] == '-' ? -1 : 1;
  for (const char* p = code + 1; *p; ++p) t.setting.push_back(*p == 'i' ? kIgnore : *p - '0');
  return t;
}

std::vector<Term> terms(std::initializer_list<const char*> codes) {
  std::vector<Term> out;
  for (const char* c : codes) out.push_back(term(c));
  return out;
}

InequalitySpec build(InequalityName n) {
  const double r2 = std::numbers::sqrt2;
  switch (n) {
    case InequalityName::Mermin3:
      return {n, {2, 2, 2}, terms({"+001", "+010", "+100", "-111"}), 2.0, 4.0, BoundModel::Local};
    case InequalityName::Svetlichny3:
      return {n, {2, 2, 2}, terms({"+001", "+010", "+100", "+000", "-110", "-101", "-011", "-111"}), 4.0,
              4.0 * r2, BoundModel::Bipartite};
    case InequalityName::Svetlichny4:
      return {n,
              {2, 2, 2, 2},
              terms({"+0000", "-1000", "-0100", "-0010", "+1101", "+1011", "+0111", "+1111", "-0001", "-1100",
                     "-1010", "-1001", "-0110", "-0101", "-0011", "+1110"}),
              8.0,
              8.0 * r2,
              BoundModel::Bipartite};
    case InequalityName::Sasa:
      // Party settings: 1 {Z, X}, 2 {Y}, 3 {X, Y}, 4 {X, Y}.
      return {n, {2, 1, 2, 2}, terms({"+0i00", "-0i11", "+1010", "+1001"}), 2.0, 4.0, BoundModel::Local};
    case InequalityName::Wwzb4:
      return {n,
              {2, 2, 2, 2},
              terms({"+0000", "+0001", "+0010", "-0011", "+0100", "-0101", "-0110", "-0111", "+1000", "-1001",
                     "-1010", "-1011", "-1100", "-1101", "-1110", "+1111"}),
              4.0,
              4.0 * r2,
              BoundModel::Local};
  }
  raise(ErrorCode::InvalidArgument, "unknown inequality");
}

EffectiveRotation xy(double phase) { return {0.5 * kPi, phase}; }

AngleSet uniform(std::size_t parties, std::vector<EffectiveRotation> per_party) {
  return AngleSet(parties, per_party);
}

bool is_ghz3(Family f) {
  return f == Family::Ghz3Conditional || f == Family::Ghz3BeamSplitter || f == Family::Ghz3Kerr;
}

bool is_cluster(Family f) { return f == Family::Cluster4Conditional || f == Family::Cluster4CrossKerr; }

AngleSet normalized(AngleSet a) {
  for (auto& party : a) {
    for (auto& r : party) r = r.normalized();
  }
  return a;
}

// Bits of all settings of one group, used as a function-table index.
struct Domain {
  std::vector<std::size_t> parties;
  std::vector<int> radix;  // settings per party, plus one symbol when the party is ever ignored
};

}  // namespace

std::string_view inequality_name(InequalityName n) noexcept {
  switch (n) {
    case InequalityName::Mermin3: return "mermin3";
    case InequalityName::Svetlichny3: return "svetlichny3";
    case InequalityName::Svetlichny4: return "svetlichny4";
    case InequalityName::Sasa: return "sasa";
    case InequalityName::Wwzb4: return "wwzb4";
  }
  return "unknown";
}

InequalityName parse_inequality(std::string_view name) {
  for (InequalityName n : kAllInequalities) {
    if (inequality_name(n) == name) return n;
  }
  raise(ErrorCode::InvalidArgument, "unknown inequality '" + std::string(name) + "'");
}

const InequalitySpec& inequality_spec(InequalityName n) {
  static const InequalitySpec specs[] = {build(InequalityName::Mermin3), build(InequalityName::Svetlichny3),
                                         build(InequalityName::Svetlichny4), build(InequalityName::Sasa),
                                         build(InequalityName::Wwzb4)};
  return specs[static_cast<int>(n)];
}

void check_arity(const InequalitySpec& spec, const AngleSet& angles) {
  if (angles.size() != spec.parties()) raise(ErrorCode::InvalidArgument, "angle set has wrong party count");
  for (std::size_t p = 0; p < spec.parties(); ++p) {
    if (static_cast<int>(angles[p].size()) != spec.settings_per_party[p]) {
      raise(ErrorCode::InvalidArgument, "angle set has wrong setting count for party " + std::to_string(p + 1));
    }
  }
}

std::vector<std::vector<PartySetting>> term_settings(const InequalitySpec& spec, const AngleSet& angles) {
  check_arity(spec, angles);
  std::vector<std::vector<PartySetting>> out;
  for (const auto& t : spec.terms) {
    std::vector<PartySetting> s;
    for (std::size_t p = 0; p < spec.parties(); ++p) {
      const int k = t.setting[p];
      s.push_back(k == kIgnore ? PartySetting::ignore()
                               : PartySetting::rotate(angles[p][static_cast<std::size_t>(k)]));
    }
    out.push_back(std::move(s));
  }
  return out;
}

Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, const Correlator& corr) {
  const auto settings = term_settings(spec, angles);
  double sum = 0.0, err = 0.0;
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const Estimate e = corr(settings[i]);
    sum += spec.terms[i].sign * e.value;
    err += e.err;
  }
  return {std::abs(sum), err};
}

Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, const MixtureKernel& kernel) {
  if (kernel.num_modes() != spec.parties()) raise(ErrorCode::Unsupported, "family and inequality party counts differ");
  return evaluate(spec, angles, [&](const std::vector<PartySetting>& s) { return kernel.correlation(s); });
}

Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, Family family, double V, double d,
                  const DetectorModel& det, const QuadratureConfig& cfg) {
  return evaluate(spec, angles, MixtureKernel(make_family(family, V, d), det, cfg));
}

bool has_canonical(InequalityName n, Family f) noexcept {
  switch (n) {
    case InequalityName::Mermin3: return is_ghz3(f);
    case InequalityName::Svetlichny3: return is_ghz3(f) || f == Family::W3;
    case InequalityName::Svetlichny4: return f == Family::Ghz4Conditional;
    case InequalityName::Sasa:
    case InequalityName::Wwzb4: return is_cluster(f);
  }
  return false;
}

CanonicalAngles canonical_angles(InequalityName n, Family f) {
  if (!has_canonical(n, f)) {
    raise(ErrorCode::Unsupported, "no stored angles for " + std::string(inequality_name(n)) + " on " +
                                      std::string(family_name(f)));
  }
  // The (1, i) branch phase of the Kerr resource turns cos(sum) into sin(sum);
  // shifting party 1 by pi/2 restores the cosine optimum.
  const double kerr = f == Family::Ghz3Kerr ? 0.5 * kPi : 0.0;
  switch (n) {
    case InequalityName::Mermin3: {
      AngleSet a = uniform(3, {xy(-kPi / 6), xy(kPi / 3)});
      for (auto& r : a[0]) r.phase += kerr;
      return {normalized(a), kerr != 0.0 ? "derived" : "canonical"};
    }
    case InequalityName::Svetlichny3: {
      if (f == Family::W3) {
        const double v = std::atan(1.0 / std::numbers::sqrt2);
        return {uniform(3, {tilted_rotation(v), tilted_rotation(kPi - v)}), "canonical"};
      }
      AngleSet a{{xy(0.75 * kPi + kerr), xy(0.25 * kPi + kerr)}, {xy(0.5 * kPi), xy(0.0)}, {xy(0.0), xy(-0.5 * kPi)}};
      return {normalized(a), kerr != 0.0 ? "derived" : "canonical"};
    }
    case InequalityName::Svetlichny4: {
      AngleSet a{{xy(0.0), xy(0.5 * kPi)},
                 {xy(0.0), xy(0.5 * kPi)},
                 {xy(0.0), xy(0.5 * kPi)},
                 {xy(0.25 * kPi), xy(0.75 * kPi)}};
      return {normalized(a), "derived"};
    }
    case InequalityName::Sasa: {
      const auto X = pauli_rotation(Pauli::X), Y = pauli_rotation(Pauli::Y), Z = pauli_rotation(Pauli::Z);
      return {AngleSet{{Z, X}, {Y}, {X, Y}, {X, Y}}, "canonical"};
    }
    case InequalityName::Wwzb4:
      return {uniform(4, {xy(3.0 * kPi / 16), xy(11.0 * kPi / 16)}), "canonical"};
  }
  raise(ErrorCode::Unsupported, "no stored angles");
}

namespace {

Domain domain_of(const InequalitySpec& spec, const std::vector<std::size_t>& parties) {
  Domain d{parties, {}};
  for (std::size_t p : parties) {
    bool ignored = false;
    for (const auto& t : spec.terms) ignored = ignored || t.setting[p] == kIgnore;
    d.radix.push_back(spec.settings_per_party[p] + (ignored ? 1 : 0));
  }
  return d;
}

std::size_t domain_size(const Domain& d) {
  std::size_t n = 1;
  for (int r : d.radix) n *= static_cast<std::size_t>(r);
  return n;
}

std::size_t domain_index(const Domain& d, const Term& t, const InequalitySpec& spec) {
  std::size_t idx = 0;
  for (std::size_t q = 0; q < d.parties.size(); ++q) {
    const std::size_t p = d.parties[q];
    const int s = t.setting[p] == kIgnore ? spec.settings_per_party[p] : t.setting[p];
    idx = idx * static_cast<std::size_t>(d.radix[q]) + static_cast<std::size_t>(s);
  }
  return idx;
}

}  // namespace

int local_bound_max(const InequalitySpec& spec) {
  std::vector<int> offset;
  int bits = 0;
  for (int s : spec.settings_per_party) {
    offset.push_back(bits);
    bits += s;
  }
  int best = 0;
  for (std::uint32_t a = 0; a < (1u << bits); ++a) {
    int sum = 0;
    for (const auto& t : spec.terms) {
      int v = t.sign;
      for (std::size_t p = 0; p < spec.parties(); ++p) {
        if (t.setting[p] == kIgnore) continue;
        if ((a >> (offset[p] + t.setting[p])) & 1u) v = -v;
      }
      sum += v;
    }
    best = std::max(best, std::abs(sum));
  }
  return best;
}

int bipartite_bound_max(const InequalitySpec& spec) {
  const std::size_t n = spec.parties();
  int best = 0;
  // Party 0 always sits in group A, so each bipartition is visited once.
  for (std::uint32_t maskA = 1; maskA < (1u << n) - 1; maskA += 2) {
    std::vector<std::size_t> pa, pb;
    for (std::size_t p = 0; p < n; ++p) ((maskA >> p) & 1u ? pa : pb).push_back(p);
    Domain A = domain_of(spec, pa), B = domain_of(spec, pb);
    if (domain_size(A) > domain_size(B)) std::swap(A, B);
    const std::size_t na = domain_size(A), nb = domain_size(B);
    if (na > 24) raise(ErrorCode::Unsupported, "bipartite enumeration too large");
    for (std::uint32_t fa = 0; fa < (1u << na); ++fa) {
      // Best response of the larger group: sum of |coefficients| per input.
      std::vector<int> coef(nb, 0);
      for (const auto& t : spec.terms) {
        const int va = ((fa >> domain_index(A, t, spec)) & 1u) ? -1 : 1;
        coef[domain_index(B, t, spec)] += t.sign * va;
      }
      int sum = 0;
      for (int c : coef) sum += std::abs(c);
      best = std::max(best, sum);
    }
  }
  return best;
}

int model_bound_max(const InequalitySpec& spec) {
  return spec.bound_model == BoundModel::Local ? local_bound_max(spec) : bipartite_bound_max(spec);
}

InequalitySpec mutated(const InequalitySpec& spec) {
  InequalitySpec m = spec;
  m.terms.back().sign = -m.terms.back().sign;
  return m;
}

}  // namespace ets
