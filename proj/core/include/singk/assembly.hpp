#pragma once

// Global invariants of a variety with isolated quotient singularities,
// assembled from the local models, and the weighted projective space helper.

#include <optional>
#include <string>
#include <vector>

#include "singk/localsing.hpp"

namespace singk {

struct GlobalSingularityData {
  std::size_t n = 0;
  std::vector<LocalModel> local_models;
};

/// A statement taken from the theory rather than computed.
struct CitedFlag {
  std::string name;
  std::string value;
  std::string statement;
  bool operator==(const CitedFlag&) const = default;
};

struct LocalSummary {
  std::string model;
  BigInt order;
  AbelianGroupStructure ksg0;
  AbelianGroupStructure cl;
  bool operator==(const LocalSummary&) const = default;
};

struct GlobalReport {
  static constexpr int kSchema = 1;

  std::size_t n = 0;
  std::vector<LocalSummary> locals;
  /// Upper group: direct sum of the local K^sg_0 (computed).
  AbelianGroupStructure kksg0;
  /// lcm(|G_i|)^{n-1} (computed).
  BigInt annihilator_bound;
  /// Direct sum of the local class groups, n = 2 only (computed).
  std::optional<AbelianGroupStructure> surface_formula;
  std::vector<CheckRecord> checks;
  std::vector<CitedFlag> flags;

  bool all_checks_passed() const;
  bool operator==(const GlobalReport&) const = default;
};

/// Throws NotFreeAction naming the offending model index, DimensionMismatch.
GlobalReport assemble(const GlobalSingularityData& data);

/// Throws NotPairwiseCoprime, InvalidArgument.
GlobalSingularityData wps_singularity_data(const std::vector<unsigned long>& weights);

/// assemble(wps_singularity_data(weights)) plus the rank statements for K_0 and G_0.
GlobalReport wps_report(const std::vector<unsigned long>& weights);

}  // namespace singk
