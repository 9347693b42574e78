#pragma once

// The representation ring R(G) in the basis of irreducible characters, the
// Koszul class r and the matrix of multiplication by r.

#include <vector>

#include "singk/characters.hpp"
#include "singk/intlat.hpp"

namespace singk {

/// Element of R(G): integer coordinates over the irreducibles of a table.
class VirtualCharacter {
 public:
  VirtualCharacter(TablePtr table, std::vector<BigInt> coords);

  /// The i-th irreducible as a basis vector.
  static VirtualCharacter basis(TablePtr table, std::size_t i);
  static VirtualCharacter from_class_function(TablePtr table, const ClassFunction& phi);

  const TablePtr& table() const noexcept { return table_; }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  ClassFunction realize() const;

  VirtualCharacter operator+(const VirtualCharacter& other) const;
  VirtualCharacter operator-(const VirtualCharacter& other) const;
  bool operator==(const VirtualCharacter& other) const;

 private:
  TablePtr table_;
  std::vector<BigInt> coords_;
};

/// Throws TableMismatch when the tables differ.
VirtualCharacter rr_multiply(const VirtualCharacter& a, const VirtualCharacter& b);

VirtualCharacter dual(const VirtualCharacter& a);

/// sum_i (-1)^i Lambda^i(rho^dual) for the defining representation rho; with
/// use_dual = false the exterior powers of rho itself are used.
VirtualCharacter koszul_class(const GroupPtr& group, const TablePtr& table, bool use_dual = true);

/// Column j holds the coordinates of r * chi_j.
IntMatrix multiplication_matrix(const VirtualCharacter& r);

}  // namespace singk
