#pragma once

// Finite matrix groups over cyclotomic fields, enumerated element by element.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "singk/cycmatrix.hpp"

namespace singk {

struct AbelianGroupStructure;

inline constexpr std::size_t kDefaultMaxOrder = 100000;
inline constexpr std::size_t kDenseTableLimit = 4096;

struct ConjugacyClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;  // sorted element indices

  std::size_t size() const noexcept { return members.size(); }
};

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// Element-index set describing a subgroup; sorted ascending.
using Subgroup = std::vector<std::size_t>;

/// A finite subgroup of GL_n(Q(zeta_N)) with every element listed.
///
/// Elements are indexed in breadth-first order from the identity (index 0)
/// using right multiplication by the generators, so indexing is a pure
/// function of the generator list. Immutable once built.
class FiniteMatrixGroup {
 public:
  std::size_t dimension() const noexcept { return dim_; }
  /// Common conductor of all matrix entries.
  unsigned long conductor() const noexcept { return conductor_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t exponent() const noexcept { return exponent_; }
  static constexpr std::size_t identity() noexcept { return 0; }

  const CycMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<CycMatrix>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generators_; }
  std::optional<std::size_t> find(const CycMatrix& m) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }
  bool has_dense_table() const noexcept { return !table_.empty(); }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Class of g^j for g in class c; j may be any integer.
  std::size_t power_class(std::size_t c, long j) const;
  /// Class containing the inverses of class c.
  std::size_t inverse_class(std::size_t c) const { return class_of_[inverse_[classes_[c].representative]]; }

  friend GroupPtr close_group(const std::vector<CycMatrix>& generators, std::size_t max_order);

 private:
  FiniteMatrixGroup() = default;
  void build_tables();
  void build_classes();

  std::size_t dim_ = 0;
  unsigned long conductor_ = 1;
  std::vector<CycMatrix> elements_;
  std::unordered_map<CycMatrix, std::size_t, CycMatrixHash> index_;
  std::vector<std::size_t> generators_;       // element index of each generator
  std::vector<std::size_t> parent_;           // BFS tree: element = parent * gens[via]
  std::vector<std::size_t> via_;
  std::vector<std::vector<std::size_t>> right_gen_;  // right_gen_[x][g] = x * gens[g]
  std::vector<std::uint32_t> table_;          // dense |G| x |G| product table
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::size_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> power_map_;  // [class][j], 0 <= j < exponent
};

/// Breadth-first closure of the generators under multiplication.
/// Throws NonInvertibleGenerator, DimensionMismatch, OrderExceeded.
GroupPtr close_group(const std::vector<CycMatrix>& generators, std::size_t max_order = kDefaultMaxOrder);

/// g is not the identity and fixes a hyperplane pointwise: rank(g - I) = 1.
bool is_reflection(const FiniteMatrixGroup& group, std::size_t element);

/// No non-identity element fixes a nonzero vector: det(g - I) != 0.
bool acts_freely_off_origin(const FiniteMatrixGroup& group);

/// Smallest subgroup containing the given elements.
Subgroup subgroup_closure(const FiniteMatrixGroup& group, const std::vector<std::size_t>& generators);

/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FiniteMatrixGroup& group, const std::vector<std::size_t>& generators);

bool is_normal(const FiniteMatrixGroup& group, const Subgroup& subgroup);

/// Subgroup generated by every reflection in the group.
Subgroup reflection_normal_closure(const FiniteMatrixGroup& group);

/// Invariant factors of the abelianization of G/N, which is isomorphic to
/// the character group of G/N. Throws NotNormal.
AbelianGroupStructure dual_abelianization_of_quotient(const FiniteMatrixGroup& group, const Subgroup& normal);

}  // namespace singk
