#pragma once

// Class functions, character tables and exterior-power characters.

#include <cstddef>
#include <memory>
#include <vector>

#include "singk/cyclotomic.hpp"
#include "singk/matgroup.hpp"

namespace singk {

/// A function on the conjugacy classes of a group, one value per class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<CycNum> values);

  /// Constant function with the given value on every class.
  static ClassFunction constant(GroupPtr group, const CycNum& value);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<CycNum>& values() const noexcept { return values_; }
  const CycNum& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at the identity class.
  const CycNum& degree_value() const { return values_.at(0); }

  ClassFunction conj() const;
  /// Values re-expressed over conductor m.
  ClassFunction promoted(unsigned long m) const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product (tensor product of characters).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  ClassFunction scaled(const BigInt& factor) const;

  bool operator==(const ClassFunction& other) const;

 private:
  void require_same_group(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<CycNum> values_;
};

/// Irreducible characters of a finite group, sorted by degree, then with the
/// trivial character first, then by descending canonical value vector.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<ClassFunction>& irreducibles() const noexcept { return irr_; }
  const ClassFunction& operator[](std::size_t i) const { return irr_[i]; }
  std::size_t size() const noexcept { return irr_.size(); }
  const std::vector<long>& degrees() const noexcept { return degrees_; }
  /// Conductor of every stored value.
  unsigned long conductor() const noexcept { return conductor_; }
  /// irreducibles()[dual_index(i)] is the complex conjugate of irreducibles()[i].
  std::size_t dual_index(std::size_t i) const { return dual_[i]; }
  std::size_t trivial_index() const noexcept { return 0; }

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irr_;
  std::vector<long> degrees_;
  std::vector<std::size_t> dual_;
  unsigned long conductor_ = 1;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Character of the defining representation: the trace of each class representative.
ClassFunction trace_character(const GroupPtr& group);

/// (1/|G|) sum_c |c| a(c) conj(b(c)). Throws GroupMismatch, and NotRational when
/// the value is irrational.
BigRational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Inner product that must be an integer; anything else is an internal
/// consistency failure (NotVirtualCharacter).
BigInt integer_inner_product(const ClassFunction& a, const ClassFunction& b);

/// Lambda^k of a genuine character through Newton's identities on power maps.
/// Throws DegreeOutOfRange, NonExactDivision.
ClassFunction exterior_power_character(const ClassFunction& chi, long k);

/// Lambda^0 ... Lambda^kmax in one pass.
std::vector<ClassFunction> exterior_power_characters(const ClassFunction& chi, long kmax);

/// Irreducible characters via class-sum eigenvectors over a prime field
/// (Dixon's method) lifted to exact cyclotomic values.
TablePtr character_table(const GroupPtr& group);

/// Integer coordinates of a virtual character in the irreducible basis.
/// Throws NotVirtualCharacter.
std::vector<BigInt> decompose(const ClassFunction& phi, const CharacterTable& table);

/// sum_i coords[i] * irreducible[i].
ClassFunction realize(const std::vector<BigInt>& coords, const CharacterTable& table);

}  // namespace singk
