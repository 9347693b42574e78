#pragma once

// Local invariants of A^n/G: G_0 as R(G)/rR(G), its torsion K^sg_0, the class
// group, and the structural checks that accompany them.

#include <optional>
#include <string>
#include <vector>

#include "singk/intlat.hpp"
#include "singk/matgroup.hpp"

namespace singk {

struct LocalModel {
  enum class Kind { MatrixGroup, CyclicWeights };

  Kind kind = Kind::CyclicWeights;
  GroupPtr group;                 // MatrixGroup
  unsigned long m = 1;            // CyclicWeights
  std::vector<unsigned long> weights;
  std::size_t n = 0;
  std::string label;

  static LocalModel matrix(GroupPtr group, std::string label = {});
  /// 1/m(a_1, ..., a_n). Throws InvalidArgument unless 1 <= a_i <= m.
  static LocalModel cyclic(unsigned long m, std::vector<unsigned long> weights);

  std::size_t group_order() const;
  /// The same quotient as a diagonal matrix group diag(z_m^{a_1}, ...).
  LocalModel as_matrix_model(std::size_t max_order = kDefaultMaxOrder) const;
  /// "1/m(a_1,...,a_n)" for cyclic models, the label otherwise.
  std::string describe() const;
};

struct CheckRecord {
  enum class Status { Pass, Fail, NotApplicable };
  std::string name;
  Status status = Status::Pass;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

std::string to_string(CheckRecord::Status s);
CheckRecord::Status check_status_from_string(const std::string& s);

struct SingInvariants {
  std::size_t dimension = 0;
  BigInt group_order;
  /// R(G)/rR(G); equals G_0 when the action is free off the origin.
  AbelianGroupStructure g0;
  /// Torsion of g0; absent when the action is not free.
  std::optional<AbelianGroupStructure> ksg0;
  AbelianGroupStructure cl;
  bool free_action = false;
  bool isolated = false;
  /// |G|^{n-1}
  BigInt annihilator_bound;
  std::vector<CheckRecord> checks;

  bool all_checks_passed() const;
  bool operator==(const SingInvariants&) const = default;
};

struct LocalOptions {
  /// Build r from exterior powers of the dual representation.
  bool use_dual = true;
  /// Throw NotFreeAction instead of flagging it.
  bool require_free_action = false;
};

/// Character-table pipeline. Cyclic models are converted to diagonal matrix groups.
SingInvariants ksg0_local(const LocalModel& model, const LocalOptions& options = {});

/// Fast path in Z[x]/(x^m - 1) with r = prod (1 - x^{a_i}).
SingInvariants ksg0_cyclic(unsigned long m, const std::vector<unsigned long>& weights,
                           const LocalOptions& options = {});

/// Dispatches on the model kind.
SingInvariants local_invariants(const LocalModel& model, const LocalOptions& options = {});

/// Character group of G/N with N generated by the reflections.
AbelianGroupStructure class_group(const LocalModel& model);

/// Circulant matrix of multiplication by prod (1 - x^{a_i}) on Z[x]/(x^m - 1).
IntMatrix cyclic_multiplication_matrix(unsigned long m, const std::vector<unsigned long>& weights);

struct OrderLawEntry {
  unsigned long m = 0;
  std::size_t n = 0;
  BigInt order;
  BigInt expected;
  bool ok = false;
};

/// |K^sg_0(1/m(1,...,1))| against m^{n-1} over the given inclusive ranges.
std::vector<OrderLawEntry> validate_order_law(unsigned long m_min, unsigned long m_max, std::size_t n_min,
                                              std::size_t n_max);

}  // namespace singk
