#include "singk/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "singk/error.hpp"

namespace singk {

namespace {

std::recursive_mutex& poly_cache_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::map<unsigned long, std::vector<long>>& poly_cache() {
  static std::map<unsigned long, std::vector<long>> cache;
  return cache;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_exact(std::vector<long> dividend, const std::vector<long>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (dividend.size() <= dd) raise(ErrorCode::AlgorithmFailure, "cyclotomic division degree");
  std::vector<long> quotient(dividend.size() - dd, 0);
  for (std::size_t k = dividend.size(); k-- > dd;) {
    const long c = dividend[k];
    quotient[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      __int128 v = static_cast<__int128>(dividend[k - dd + i]) - static_cast<__int128>(c) * divisor[i];
      if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        raise(ErrorCode::AlgorithmFailure, "cyclotomic polynomial coefficient overflow");
      dividend[k - dd + i] = static_cast<long>(v);
    }
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (dividend[i] != 0) raise(ErrorCode::AlgorithmFailure, "inexact cyclotomic division");
  return quotient;
}

void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_mpz(const mpz_class& z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i)
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  return h;
}

long mod_pos(long a, unsigned long n) {
  const long m = static_cast<long>(n);
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return std::lcm(a, b);
}

const std::vector<long>& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) raise(ErrorCode::InvalidArgument, "conductor must be positive");
  std::lock_guard<std::recursive_mutex> lock(poly_cache_mutex());
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(poly)).first->second;
}

CycNum::CycNum() : conductor_(1), num_(1), den_(1) {}

CycNum::CycNum(long value) : conductor_(1), num_{BigInt(value)}, den_(1) {}

CycNum::CycNum(const BigRational& value, unsigned long conductor)
    : conductor_(conductor), num_(euler_phi(conductor)), den_(value.get_den()) {
  num_[0] = value.get_num();
}

CycNum::CycNum(unsigned long conductor, std::vector<BigInt> num, BigInt den)
    : conductor_(conductor), den_(std::move(den)) {
  reduce_and_canonicalize(std::move(num));
}

CycNum CycNum::zeta(unsigned long conductor, long power) {
  if (conductor == 0) raise(ErrorCode::InvalidArgument, "conductor must be positive");
  std::vector<BigInt> poly(static_cast<std::size_t>(mod_pos(power, conductor)) + 1);
  poly.back() = 1;
  return CycNum(conductor, std::move(poly), BigInt(1));
}

CycNum CycNum::from_coeffs(unsigned long conductor, std::span<const BigRational> coeffs) {
  if (conductor == 0) raise(ErrorCode::InvalidArgument, "conductor must be positive");
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> poly(std::max<std::size_t>(coeffs.size(), 1));
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    poly[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  return CycNum(conductor, std::move(poly), std::move(den));
}

void CycNum::reduce_and_canonicalize(std::vector<BigInt> poly) {
  const unsigned long n = conductor_;
  if (poly.size() > n) {
    for (std::size_t j = n; j < poly.size(); ++j) poly[j % n] += poly[j];
    poly.resize(n);
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const BigInt c = poly[k];
    for (std::size_t i = 0; i < deg; ++i)
      if (phi_poly[i] != 0) poly[k - deg + i] -= c * phi_poly[i];
    poly[k] = 0;
  }
  poly.resize(deg);
  num_ = std::move(poly);
  canonicalize();
}

void CycNum::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c != 0) {
      all_zero = false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

BigRational CycNum::coeff(std::size_t j) const {
  if (j >= num_.size()) return BigRational(0);
  BigRational q(num_[j], den_);
  q.canonicalize();
  return q;
}

std::vector<BigRational> CycNum::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) out.push_back(coeff(j));
  return out;
}

bool CycNum::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const BigInt& c) { return c == 0; });
}

bool CycNum::is_rational() const noexcept {
  return std::all_of(num_.begin() + 1, num_.end(), [](const BigInt& c) { return c == 0; });
}

BigRational CycNum::to_rational() const {
  if (!is_rational()) raise(ErrorCode::NotRational, to_string());
  return coeff(0);
}

BigInt CycNum::to_integer() const {
  const BigRational q = to_rational();
  if (q.get_den() != 1) raise(ErrorCode::NotIntegral, to_string());
  return q.get_num();
}

CycNum CycNum::promote(unsigned long m) const {
  if (m == conductor_) return *this;
  if (m == 0 || m % conductor_ != 0)
    raise(ErrorCode::ConductorMismatch,
          "cannot promote conductor " + std::to_string(conductor_) + " to " + std::to_string(m));
  const std::size_t step = m / conductor_;
  std::vector<BigInt> poly((num_.size() - 1) * step + 1);
  for (std::size_t j = 0; j < num_.size(); ++j) poly[j * step] = num_[j];
  CycNum out;
  out.conductor_ = m;
  out.den_ = den_;
  out.reduce_and_canonicalize(std::move(poly));
  return out;
}

CycNum CycNum::galois(long k) const {
  const unsigned long n = conductor_;
  if (n <= 2) return *this;
  const long kk = mod_pos(k, n);
  if (std::gcd(static_cast<unsigned long>(kk), n) != 1)
    raise(ErrorCode::InvalidArgument, "Galois exponent must be coprime to the conductor");
  std::vector<BigInt> poly(n);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) poly[(j * static_cast<unsigned long>(kk)) % n] += num_[j];
  CycNum out;
  out.conductor_ = n;
  out.den_ = den_;
  out.reduce_and_canonicalize(std::move(poly));
  return out;
}

CycNum CycNum::conj() const {
  return galois(static_cast<long>(conductor_) - 1);
}

CycNum CycNum::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    BigRational q = coeff(0);
    return CycNum(BigRational(1) / q, conductor_);
  }
  // The product of all non-trivial Galois conjugates is the adjugate of the norm.
  CycNum adj(BigRational(1), conductor_);
  for (unsigned long k = 2; k < conductor_; ++k)
    if (std::gcd(k, conductor_) == 1) adj = cyc_mul(adj, galois(static_cast<long>(k)));
  const BigRational norm = cyc_mul(*this, adj).to_rational();
  return adj.scaled(BigRational(1) / norm);
}

void CycNum::make_common(CycNum& a, CycNum& b) {
  if (a.conductor_ == b.conductor_) return;
  const unsigned long m = lcm_ul(a.conductor_, b.conductor_);
  a = a.promote(m);
  b = b.promote(m);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (conductor_ != other.conductor_) {
    CycNum rhs = other;
    make_common(*this, rhs);
    return *this += rhs;
  }
  const CycNum& rhs = other;
  if (den_ == rhs.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += rhs.num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * rhs.den_ + rhs.num_[j] * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  if (this == &other) {
    *this = CycNum(BigRational(0), conductor_);
    return *this;
  }
  return *this += -other;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  if (conductor_ == other.conductor_) {
    *this = cyc_mul(*this, other);
  } else {
    CycNum rhs = other;
    make_common(*this, rhs);
    *this = cyc_mul(*this, rhs);
  }
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) {
  return *this *= other.inverse();
}

CycNum CycNum::scaled(const BigRational& factor) const {
  CycNum out = *this;
  for (auto& c : out.num_) c *= factor.get_num();
  out.den_ *= factor.get_den();
  out.canonicalize();
  return out;
}

CycNum CycNum::divided_by(long divisor) const {
  if (divisor == 0) raise(ErrorCode::DivisionByZero, "division by zero");
  CycNum out = *this;
  out.den_ *= divisor;
  out.canonicalize();
  return out;
}

CycNum cyc_mul(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor())
    raise(ErrorCode::ConductorMismatch, "cyc_mul operands have different conductors");
  const auto& x = a.numerators();
  const auto& y = b.numerators();
  std::vector<BigInt> poly(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) mpz_addmul(poly[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  return CycNum(a.conductor(), std::move(poly), a.denominator() * b.denominator());
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  CycNum x = a, y = b;
  CycNum::make_common(x, y);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

bool lex_less(const CycNum& a, const CycNum& b) {
  CycNum x = a, y = b;
  CycNum::make_common(x, y);
  for (std::size_t j = 0; j < x.num_.size(); ++j) {
    // compare x_j/dx with y_j/dy via cross multiplication
    const BigInt lhs = x.num_[j] * y.den_;
    const BigInt rhs = y.num_[j] * x.den_;
    if (lhs != rhs) return lhs < rhs;
  }
  return false;
}

std::size_t CycNum::hash() const noexcept {
  std::size_t h = conductor_;
  hash_combine(h, hash_mpz(den_));
  for (const auto& c : num_) hash_combine(h, hash_mpz(c));
  return h;
}

std::string CycNum::to_string() const {
  if (is_rational()) return coeff(0).get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    BigRational c = coeff(j);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z' << conductor_;
    if (j > 1) os << '^' << j;
  }
  return os.str();
}

}  // namespace singk
