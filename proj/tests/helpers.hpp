#pragma once

#include <random>
#include <vector>

#include "singk/cyclotomic.hpp"
#include "singk/intlat.hpp"
#include "singk/matgroup.hpp"

namespace test {

inline singk::CycNum z(unsigned long n, long k = 1) { return singk::CycNum::zeta(n, k); }

inline singk::CycNum random_cyc(std::mt19937_64& rng, unsigned long n) {
  std::uniform_int_distribution<long> c(-5, 5), d(1, 4);
  singk::CycNum x(singk::BigRational(0), n);
  for (unsigned long k = 0; k < n; ++k) x += z(n, static_cast<long>(k)).scaled(singk::BigRational(c(rng), d(rng)));
  return x;
}

inline singk::AbelianGroupStructure zmod(std::vector<long> orders) {
  std::vector<singk::BigInt> b;
  for (auto o : orders) b.emplace_back(o);
  return singk::AbelianGroupStructure::from_cyclic_orders(b);
}

inline singk::CycMatrix diag(std::vector<singk::CycNum> d) { return singk::CycMatrix::diagonal(d); }

// Quaternion group as BD_2.
inline singk::GroupPtr quaternion_group() {
  return singk::close_group({diag({z(4), z(4, 3)}), singk::CycMatrix(2, {0, 1, -1, 0})});
}

}  // namespace test
