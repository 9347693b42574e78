#pragma once

// Independent reference computations used to cross-check the core library.
// They favour obviousness over speed.

#include <complex>
#include <vector>

#include "singk/characters.hpp"
#include "singk/intlat.hpp"

namespace singk::verify {

/// Image of x under zeta_N -> exp(2 pi i / N).
std::complex<double> embed(const CycNum& x);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt bareiss_determinant(const IntMatrix& m);

/// Rank by fraction-free elimination.
std::size_t bareiss_rank(const IntMatrix& m);

/// gcd of all r x r minors, r = rank; 1 for the zero matrix.
BigInt maximal_minor_gcd(const IntMatrix& m);

/// Invariant factors (>= 2, divisibility chain) by repeated (gcd, lcm) replacement.
std::vector<BigInt> invariant_factors_by_gcd_lcm(std::vector<BigInt> orders);

/// Linear characters as exponent vectors: element i maps to zeta_e^{v[i]}.
/// Found by trying every assignment of e-th roots of unity to the generators.
std::vector<std::vector<unsigned long>> linear_characters(const FiniteMatrixGroup& group);

/// Irreducible characters found by saturating tensor products of the defining
/// representation, its dual and the linear characters. The result is unsorted.
/// Returns whatever it found; completeness is the caller's check.
std::vector<ClassFunction> saturation_character_table(const GroupPtr& group);

/// Class function galois(k) applied valuewise.
ClassFunction galois_conjugate(const ClassFunction& chi, long k);

}  // namespace singk::verify
