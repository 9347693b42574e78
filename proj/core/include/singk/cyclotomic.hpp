#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores sum_j c_j zeta_N^j in the power basis reduced modulo the
// N-th cyclotomic polynomial, so only the first phi(N) coefficients can be
// nonzero. Coefficients are kept as integer numerators over one positive
// common denominator with gcd(den, all numerators) = 1; this is the unique
// canonical form and is what equality and hashing look at.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace singk {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// Computed once per conductor and cached for the lifetime of the process.
const std::vector<long>& cyclotomic_polynomial(unsigned long n);

unsigned long lcm_ul(unsigned long a, unsigned long b);

class CycNum {
 public:
  /// Zero in Q = Q(zeta_1).
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const BigRational& value, unsigned long conductor = 1);

  /// zeta_N^power for any integer power.
  static CycNum zeta(unsigned long conductor, long power = 1);

  /// sum_j coeffs[j] zeta_N^j for coefficient vectors of any length.
  static CycNum from_coeffs(unsigned long conductor, std::span<const BigRational> coeffs);

  unsigned long conductor() const noexcept { return conductor_; }
  /// phi(N): the length of the canonical coefficient vector.
  std::size_t basis_size() const noexcept { return num_.size(); }

  BigRational coeff(std::size_t j) const;
  std::vector<BigRational> coeffs() const;
  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// All coefficients integral, i.e. the value lies in Z[zeta_N].
  bool is_algebraic_integer() const noexcept { return den_ == 1; }

  /// Throws NotRational when some coefficient above index 0 is nonzero.
  BigRational to_rational() const;
  /// Throws NotRational or NotIntegral.
  BigInt to_integer() const;

  /// Re-expresses the value over conductor m, which must be a multiple of N.
  CycNum promote(unsigned long m) const;
  /// The Galois automorphism zeta_N -> zeta_N^k; k must be coprime to N.
  CycNum galois(long k) const;
  /// Complex conjugation zeta_N -> zeta_N^{-1}.
  CycNum conj() const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum scaled(const BigRational& factor) const;
  /// Exact division by a nonzero integer.
  CycNum divided_by(long divisor) const;

  /// Compares values after promotion to a common conductor.
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Total order on canonical forms of equal conductor: lexicographic on the
  /// coefficient vectors (used only for deterministic sorting).
  friend bool lex_less(const CycNum& a, const CycNum& b);

  /// Hash of the canonical form. Consistent with == for equal conductors.
  std::size_t hash() const noexcept;

  friend CycNum cyc_mul(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  CycNum(unsigned long conductor, std::vector<BigInt> num, BigInt den);

  void canonicalize();
  void reduce_and_canonicalize(std::vector<BigInt> poly);
  static void make_common(CycNum& a, CycNum& b);

  unsigned long conductor_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

/// Plain multiplication for operands already sharing a conductor.
/// Throws ConductorMismatch otherwise.
CycNum cyc_mul(const CycNum& a, const CycNum& b);

/// Total order on canonical coefficient vectors.
bool lex_less(const CycNum& a, const CycNum& b);

struct CycNumHash {
  std::size_t operator()(const CycNum& x) const noexcept { return x.hash(); }
};

}  // namespace singk
