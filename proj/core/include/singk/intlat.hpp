#pragma once

// Exact integer linear algebra: Smith normal form, cokernels, and finitely
// generated abelian groups in invariant-factor form.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singk/cyclotomic.hpp"

namespace singk {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<BigInt>& entries() const noexcept { return a_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transposed() const;
  bool is_zero() const;
  std::string to_string() const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t k);
  /// row_i += factor * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const BigInt& factor);
  /// col_j += factor * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const BigInt& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0,
/// zero entries last.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;

  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_i >= 2 and d_1 | d_2 | ... | d_k.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroupStructure trivial() { return {}; }
  static AbelianGroupStructure free(std::size_t rank) { return {rank, {}}; }
  /// Direct sum of cyclic groups of the given orders (0 means Z), normalized.
  static AbelianGroupStructure from_cyclic_orders(const std::vector<BigInt>& orders);

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const noexcept { return free_rank == 0; }
  /// Number of elements; nullopt when infinite.
  std::optional<BigInt> order() const;
  /// The torsion subgroup.
  AbelianGroupStructure torsion_part() const { return {0, torsion}; }

  /// "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4", ...
  std::string to_string() const;

  bool operator==(const AbelianGroupStructure&) const = default;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Z^rows / image(M).
AbelianGroupStructure cokernel(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// cols - rank.
std::size_t kernel_rank(const IntMatrix& m);

/// Largest invariant factor; 1 for the trivial group; nullopt if infinite.
std::optional<BigInt> group_exponent(const AbelianGroupStructure& a);

AbelianGroupStructure direct_sum(const std::vector<AbelianGroupStructure>& groups);

/// Trial-division factorization into (prime, exponent) pairs. Throws
/// FactorizationTooLarge for |n| >= 2^128.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

}  // namespace singk
