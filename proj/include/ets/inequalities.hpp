// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ets/integration.hpp"
#include "ets/measurement.hpp"
#include "ets/states.hpp"

namespace ets {

enum class InequalityName { Mermin3, Svetlichny3, Svetlichny4, Sasa, Wwzb4 };

inline constexpr InequalityName kAllInequalities[] = {
    InequalityName::Mermin3, InequalityName::Svetlichny3, InequalityName::Svetlichny4,
    InequalityName::Sasa,    InequalityName::Wwzb4,
};

std::string_view inequality_name(InequalityName n) noexcept;  // mermin3, svetlichny3, ...
InequalityName parse_inequality(std::string_view name);

inline constexpr int kIgnore = -1;

struct Term {
  int sign = 1;
  std::vector<int> setting;  // per party; kIgnore marginalizes that party
};

/// Which hidden-variable class the stored lr_bound refers to.
enum class BoundModel {
  Local,      // every party answers from its own setting
  Bipartite,  // hybrid models: two groups, arbitrary signalling inside each
};

struct InequalitySpec {
  InequalityName name;
  std::vector<int> settings_per_party;
  std::vector<Term> terms;
  double lr_bound = 0.0;
  double quantum_max = 0.0;
  BoundModel bound_model = BoundModel::Local;

  std::size_t parties() const noexcept { return settings_per_party.size(); }
};

const InequalitySpec& inequality_spec(InequalityName n);

/// Per party, per setting index.
using AngleSet = std::vector<std::vector<EffectiveRotation>>;

void check_arity(const InequalitySpec& spec, const AngleSet& angles);

/// Settings of every term, in term order.
std::vector<std::vector<PartySetting>> term_settings(const InequalitySpec& spec, const AngleSet& angles);

using Correlator = std::function<Estimate(const std::vector<PartySetting>&)>;

/// |sum_t sign_t C(term_t)|; the error is the sum of term errors.
Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, const Correlator& corr);
Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, const MixtureKernel& kernel);
Estimate evaluate(const InequalitySpec& spec, const AngleSet& angles, Family family, double V, double d,
                  const DetectorModel& det, const QuadratureConfig& cfg);

struct CanonicalAngles {
  AngleSet angles;
  std::string provenance;  // "canonical" or "derived" (stored optimizer output)
};

bool has_canonical(InequalityName n, Family f) noexcept;
/// Throws Unsupported for pairs without a stored set.
CanonicalAngles canonical_angles(InequalityName n, Family f);

struct OptimizeResult {
  AngleSet angles;
  Estimate value;
  int best_restart = 0;
  bool stagnated = false;  // no restart met the simplex tolerance
};

/// Nelder-Mead over (theta, phase) of every setting, restart 0 seeded from
/// the canonical set when one exists and the rest uniformly at random. Ties
/// go to the lowest restart index.
OptimizeResult optimize_angles(const InequalitySpec& spec, const MixtureKernel& kernel, int restarts,
                               std::uint64_t seed, const AngleSet* start = nullptr);
OptimizeResult optimize_angles(const InequalitySpec& spec, Family family, double V, double d,
                               const DetectorModel& det, const QuadratureConfig& cfg, int restarts = 20);

/// Exhaustive maximum of |sum| over deterministic local assignments.
int local_bound_max(const InequalitySpec& spec);
/// Exhaustive maximum over all bipartitions with arbitrary +/-1 response
/// functions of each group's joint settings.
int bipartite_bound_max(const InequalitySpec& spec);
/// Maximum for the class named by spec.bound_model.
int model_bound_max(const InequalitySpec& spec);

/// Copy with the sign of the last term flipped; used to exercise the bound check.
InequalitySpec mutated(const InequalitySpec& spec);

}  // namespace ets
