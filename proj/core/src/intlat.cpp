#include "singk/intlat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "singk/error.hpp"

namespace singk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) raise(ErrorCode::DimensionMismatch, "entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) raise(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) raise(ErrorCode::DimensionMismatch, "matrix product shapes");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), rhs(k, j).get_mpz_t());
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    mpz_addmul((*this)(i, j).get_mpz_t(), factor.get_mpz_t(), (*this)(k, j).get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    mpz_addmul((*this)(i, j).get_mpz_t(), factor.get_mpz_t(), (*this)(i, k).get_mpz_t());
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least absolute value in the trailing block, ties broken by
// lowest row then lowest column.
std::optional<Pivot> min_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Pivot{i, j};
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto move_to = [&](Pivot p, std::size_t t) {
    a.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    a.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    auto p = min_entry(a, t);
    if (!p) break;
    move_to(*p, t);

    while (true) {
      BigInt q;
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        const BigInt f = -q;
        a.add_row_multiple(i, t, f);
        u.add_row_multiple(i, t, f);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        const BigInt f = -q;
        a.add_col_multiple(j, t, f);
        v.add_col_multiple(j, t, f);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; pivot on it
        std::optional<Pivot> best;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && (!best || mpz_cmpabs(a(i, t).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0)) best = Pivot{i, t};
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && (!best || mpz_cmpabs(a(t, j).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0)) best = Pivot{t, j};
        a.swap_rows(t, best->row);
        u.swap_rows(t, best->row);
        a.swap_cols(t, best->col);
        v.swap_cols(t, best->col);
        continue;
      }
      // the pivot must divide the whole trailing block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      a.add_row_multiple(t, *bad_row, BigInt(1));
      u.add_row_multiple(t, *bad_row, BigInt(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
#ifndef NDEBUG
  if (!(u * m * v == a)) raise(ErrorCode::AlgorithmFailure, "Smith form does not reproduce the input");
#endif
  return SmithForm{std::move(u), std::move(v), std::move(a)};
}

std::size_t matrix_rank(const IntMatrix& m) {
  return smith_normal_form(m).rank();
}

AbelianGroupStructure cokernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  AbelianGroupStructure out;
  out.free_rank = m.rows() - s.rank();
  for (const auto& d : s.diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::size_t kernel_rank(const IntMatrix& m) {
  return m.cols() - matrix_rank(m);
}

std::optional<BigInt> group_exponent(const AbelianGroupStructure& a) {
  if (a.free_rank > 0) return std::nullopt;
  if (a.torsion.empty()) return BigInt(1);
  return a.torsion.back();
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  BigInt x = abs(n);
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, 128);
  if (x >= limit) raise(ErrorCode::FactorizationTooLarge, x.get_str() + " needs an external factorization");
  std::vector<std::pair<BigInt, unsigned>> out;
  if (x <= 1) return out;
  auto take = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(BigInt(2));
  for (BigInt p = 3; p * p <= x; p += 2) take(p);
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

AbelianGroupStructure AbelianGroupStructure::from_cyclic_orders(const std::vector<BigInt>& orders) {
  AbelianGroupStructure out;
  // prime -> exponents of the prime-power cyclic summands
  std::map<BigInt, std::vector<unsigned>> primary;
  for (const auto& d : orders) {
    if (d == 0) {
      ++out.free_rank;
      continue;
    }
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  }
  std::size_t count = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  // the i-th largest invariant factor collects the i-th largest power of each prime
  std::vector<BigInt> factors(count, BigInt(1));
  for (const auto& [p, exps] : primary)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[i] *= pe;
    }
  std::reverse(factors.begin(), factors.end());
  out.torsion = std::move(factors);
  return out;
}

std::optional<BigInt> AbelianGroupStructure::order() const {
  if (free_rank > 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianGroupStructure::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

AbelianGroupStructure direct_sum(const std::vector<AbelianGroupStructure>& groups) {
  std::vector<BigInt> orders;
  std::size_t free_rank = 0;
  for (const auto& g : groups) {
    free_rank += g.free_rank;
    orders.insert(orders.end(), g.torsion.begin(), g.torsion.end());
  }
  AbelianGroupStructure out = AbelianGroupStructure::from_cyclic_orders(orders);
  out.free_rank = free_rank;
  return out;
}

}  // namespace singk
