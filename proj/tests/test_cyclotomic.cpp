#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "singk/error.hpp"
#include "singk/verify/oracles.hpp"

using namespace singk;
using test::z;

namespace {

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("products reduce modulo the cyclotomic polynomial") {
    const CycNum i2 = cyc_mul(z(4), z(4));
    CHECK(i2 == CycNum(-1));
    CHECK(i2.conductor() == 4);
    CHECK(i2.coeff(0) == -1);
    CHECK(i2.coeff(1) == 0);

    CHECK(cyc_mul(z(3) + z(3, 2), CycNum(BigRational(1), 3)) == CycNum(-1));

    // (z8 + z8^-1)^2 = 2, also checked numerically
    const CycNum s = z(8) + z(8, 7);
    CHECK(s * s == CycNum(2));
    CHECK(close(verify::embed(s * s), verify::embed(s) * verify::embed(s)));
  }

  TEST_CASE("conjugation") {
    CHECK(z(5).conj() == z(5, 4));
    CHECK(CycNum(BigRational(3, 2)).conj() == CycNum(BigRational(3, 2)));
    CHECK((z(3) + z(3, 2).scaled(2)).conj() == z(3, 2) + z(3).scaled(2));
    std::mt19937_64 rng(7);
    for (unsigned long n : {1UL, 2UL, 3UL, 5UL, 8UL, 12UL, 20UL}) {
      const CycNum x = test::random_cyc(rng, n);
      CHECK(x.conj().conj() == x);
      CHECK(close(verify::embed(x.conj()), std::conj(verify::embed(x))));
    }
  }

  TEST_CASE("integer extraction") {
    const BigRational five[] = {5, 0, 0, 0};
    CHECK(CycNum::from_coeffs(4, five).to_integer() == 5);
    CHECK_THROWS_AS(z(3).to_integer(), Error);
    try {
      (void)z(3).to_integer();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRational);
    }
    try {
      (void)CycNum(BigRational(1, 2)).to_integer();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotIntegral);
    }
  }

  TEST_CASE("canonical form") {
    // z6^2 = z3 and 1 + z3 + z3^2 = 0
    CHECK(z(6, 2) == z(3));
    CHECK(CycNum(1) + z(3) + z(3, 2) == CycNum(0));
    CHECK((CycNum(1) + z(3) + z(3, 2)).is_zero());
    const CycNum x = z(12, 5) + z(12, 7);
    CHECK(x.basis_size() == euler_phi(12));
    const BigRational folded[] = {0, 0, 0, 0, 0, 1};  // z5^5 = 1
    CHECK(CycNum::from_coeffs(5, folded) == CycNum(1));
  }

  TEST_CASE("field operations agree with the complex embedding") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      const unsigned long n = std::uniform_int_distribution<unsigned long>(1, 24)(rng);
      const unsigned long m = std::uniform_int_distribution<unsigned long>(1, 12)(rng);
      const CycNum a = test::random_cyc(rng, n);
      const CycNum b = test::random_cyc(rng, m);
      CHECK(close(verify::embed(a + b), verify::embed(a) + verify::embed(b)));
      CHECK(close(verify::embed(a - b), verify::embed(a) - verify::embed(b)));
      CHECK(close(verify::embed(a * b), verify::embed(a) * verify::embed(b)));
      if (!b.is_zero()) {
        CHECK(close(verify::embed(a / b), verify::embed(a) / verify::embed(b)));
        CHECK(b * b.inverse() == CycNum(1));
      }
      CHECK(a.promote(a.conductor() * 3) == a);
    }
  }

  TEST_CASE("Galois-invariant elements are rational") {
    std::mt19937_64 rng(3);
    for (unsigned long n : {5UL, 7UL, 9UL, 12UL}) {
      const CycNum x = test::random_cyc(rng, n);
      CycNum trace;
      for (unsigned long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) trace += x.galois(static_cast<long>(k));
      CHECK(trace.is_rational());
      for (unsigned long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) CHECK(trace.galois(static_cast<long>(k)) == trace);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(cyc_mul(z(3), z(4)), Error);
    try {
      (void)cyc_mul(z(3), z(4));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConductorMismatch);
    }
    try {
      (void)(z(3) / CycNum(0));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }

  TEST_CASE("rendering") {
    CHECK(CycNum(BigRational(3, 2)).to_string() == "3/2");
    CHECK(CycNum(0).to_string() == "0");
    CHECK(z(4).to_string().find("z4") != std::string::npos);
  }
}
