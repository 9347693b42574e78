#pragma once

#include <cstddef>
#include <vector>

#include "singk/cyclotomic.hpp"

namespace singk {

/// Square matrix over Q(zeta_N), row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(std::size_t n);
  CycMatrix(std::size_t n, std::vector<CycNum> entries);

  static CycMatrix identity(std::size_t n, unsigned long conductor = 1);
  static CycMatrix diagonal(const std::vector<CycNum>& diag);

  std::size_t dim() const noexcept { return n_; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<CycNum>& entries() const noexcept { return a_; }

  /// lcm of entry conductors.
  unsigned long conductor() const;
  /// All entries promoted to conductor m.
  CycMatrix promoted(unsigned long m) const;

  CycMatrix operator*(const CycMatrix& rhs) const;
  CycMatrix operator-(const CycMatrix& rhs) const;
  bool operator==(const CycMatrix& rhs) const;

  CycNum trace() const;
  CycNum determinant() const;
  std::size_t rank() const;
  bool is_identity() const;

  std::size_t hash() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<CycNum> a_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const noexcept { return m.hash(); }
};

}  // namespace singk
