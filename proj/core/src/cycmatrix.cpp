#include "singk/cycmatrix.hpp"

#include "singk/error.hpp"

namespace singk {

namespace {

// Gaussian elimination in place; returns the rank and accumulates the
// determinant of the leading square block when requested.
std::size_t eliminate(std::vector<CycNum>& a, std::size_t n, CycNum* det) {
  std::size_t rank = 0;
  CycNum d(1);
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) {
      d = CycNum(0);
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
      d = -d;
    }
    const CycNum p = a[rank * n + col];
    d *= p;
    const CycNum pinv = p.inverse();
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a[i * n + col].is_zero()) continue;
      const CycNum f = a[i * n + col] * pinv;
      for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[rank * n + j];
    }
    ++rank;
  }
  if (det) *det = rank == n ? d : CycNum(0);
  return rank;
}

}  // namespace

CycMatrix::CycMatrix(std::size_t n) : n_(n), a_(n * n) {}

CycMatrix::CycMatrix(std::size_t n, std::vector<CycNum> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) raise(ErrorCode::DimensionMismatch, "matrix entry count is not n*n");
}

CycMatrix CycMatrix::identity(std::size_t n, unsigned long conductor) {
  CycMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = CycNum(BigRational(i == j ? 1 : 0), conductor);
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& diag) {
  unsigned long cond = 1;
  for (const auto& x : diag) cond = lcm_ul(cond, x.conductor());
  CycMatrix m = identity(diag.size(), cond);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i].promote(cond);
  return m;
}

unsigned long CycMatrix::conductor() const {
  unsigned long c = 1;
  for (const auto& x : a_) c = lcm_ul(c, x.conductor());
  return c;
}

CycMatrix CycMatrix::promoted(unsigned long m) const {
  CycMatrix out(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k].promote(m);
  return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) raise(ErrorCode::DimensionMismatch, "matrix product dimensions");
  CycMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      CycNum acc;
      bool started = false;
      for (std::size_t k = 0; k < n_; ++k) {
        const CycNum& x = (*this)(i, k);
        const CycNum& y = rhs(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        if (!started) {
          acc = x * y;
          started = true;
        } else {
          acc += x * y;
        }
      }
      if (!started) acc = CycNum(BigRational(0), lcm_ul((*this)(i, 0).conductor(), rhs(0, j).conductor()));
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
  if (n_ != rhs.n_) raise(ErrorCode::DimensionMismatch, "matrix difference dimensions");
  CycMatrix out(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - rhs.a_[k];
  return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
  return n_ == rhs.n_ && a_ == rhs.a_;
}

CycNum CycMatrix::trace() const {
  CycNum t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CycNum CycMatrix::determinant() const {
  if (n_ == 0) return CycNum(1);
  std::vector<CycNum> work = a_;
  CycNum det;
  eliminate(work, n_, &det);
  return det;
}

std::size_t CycMatrix::rank() const {
  std::vector<CycNum> work = a_;
  return eliminate(work, n_, nullptr);
}

bool CycMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!((*this)(i, j) == CycNum(i == j ? 1 : 0))) return false;
  return true;
}

std::size_t CycMatrix::hash() const noexcept {
  std::size_t h = n_;
  for (const auto& x : a_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace singk
