#include "singk/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <numbers>

namespace singk::verify {

std::complex<double> embed(const CycNum& x) {
  const double n = static_cast<double>(x.conductor());
  std::complex<double> sum = 0;
  const auto cs = x.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    sum += cs[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

BigInt bareiss_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t bareiss_rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < a.rows(); ++i)
      for (std::size_t j = col + 1; j < a.cols(); ++j) a(i, j) = a(i, j) * a(rank, col) - a(i, col) * a(rank, j);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) a(i, col) = 0;
    ++rank;
  }
  return rank;
}

namespace {

void subsets(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigInt maximal_minor_gcd(const IntMatrix& m) {
  const std::size_t r = bareiss_rank(m);
  if (r == 0) return 1;
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), r, 0, cur, rows);
  subsets(m.cols(), r, 0, cur, cols);
  BigInt g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      IntMatrix sub(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rs[i], cs[j]);
      const BigInt d = bareiss_determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

std::vector<BigInt> invariant_factors_by_gcd_lcm(std::vector<BigInt> orders) {
  for (auto& d : orders) d = abs(d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t j = i + 1; j < orders.size(); ++j) {
        BigInt g, l;
        mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
        mpz_lcm(l.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
        if (g != orders[i] || l != orders[j]) {
          orders[i] = g;
          orders[j] = l;
          changed = true;
        }
      }
  }
  std::vector<BigInt> out;
  for (auto& d : orders)
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<std::vector<unsigned long>> linear_characters(const FiniteMatrixGroup& group) {
  const unsigned long e = group.exponent();
  const auto& gens = group.generator_indices();
  const std::size_t n = group.order();
  // words: each element as a product of generators, from a BFS
  std::vector<std::size_t> parent(n, n), via(n, 0);
  std::vector<std::size_t> order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::size_t y = group.multiply(order[i], gens[g]);
      if (parent[y] == n) {
        parent[y] = order[i];
        via[y] = g;
        order.push_back(y);
      }
    }

  std::vector<std::vector<unsigned long>> out;
  std::vector<unsigned long> assign(gens.size(), 0);
  while (true) {
    std::vector<unsigned long> v(n, 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const std::size_t y = order[i];
      v[y] = (v[parent[y]] + assign[via[y]]) % e;
    }
    bool hom = true;
    for (std::size_t x = 0; x < n && hom; ++x)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (v[group.multiply(x, gens[g])] != (v[x] + assign[g]) % e) {
          hom = false;
          break;
        }
    if (hom) out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == e) assign[k++] = 0;
    if (k == assign.size()) break;
  }
  return out;
}

ClassFunction galois_conjugate(const ClassFunction& chi, long k) {
  std::vector<CycNum> v;
  for (const auto& x : chi.values()) v.push_back(x.galois(k));
  return ClassFunction(chi.group(), std::move(v));
}

std::vector<ClassFunction> saturation_character_table(const GroupPtr& group) {
  const auto& g = *group;
  const unsigned long cond = lcm_ul(g.conductor(), g.exponent());
  std::vector<ClassFunction> found;
  long sum_sq = 0;
  const long order = static_cast<long>(g.order());

  auto add_if_new = [&](const ClassFunction& chi) {
    if (std::find(found.begin(), found.end(), chi) != found.end()) return false;
    found.push_back(chi);
    const long d = chi.degree_value().to_integer().get_si();
    sum_sq += d * d;
    return true;
  };

  std::deque<ClassFunction> queue;
  for (const auto& v : linear_characters(g)) {
    std::vector<CycNum> values;
    for (const auto& cls : g.classes())
      values.push_back(CycNum::zeta(g.exponent(), static_cast<long>(v[cls.representative])).promote(cond));
    ClassFunction chi(group, std::move(values));
    if (add_if_new(chi)) queue.push_back(chi);
  }
  const ClassFunction rho = trace_character(group);
  queue.push_back(rho);
  queue.push_back(rho.conj());

  std::size_t budget = 20000;
  while (!queue.empty() && sum_sq < order && budget-- > 0) {
    ClassFunction phi = queue.front();
    queue.pop_front();
    // strip known constituents
    for (const auto& chi : found) {
      const BigRational c = inner_product(phi, chi);
      if (c != 0) phi -= chi.scaled(c.get_num());
    }
    if (std::all_of(phi.values().begin(), phi.values().end(), [](const CycNum& x) { return x.is_zero(); })) continue;
    std::vector<ClassFunction> fresh;
    if (inner_product(phi, phi) == 1 && phi.degree_value().to_rational() > 0) {
      for (unsigned long k = 1; k < cond; ++k) {
        if (std::gcd(k, cond) != 1) continue;
        const ClassFunction conj = galois_conjugate(phi, static_cast<long>(k));
        if (add_if_new(conj)) fresh.push_back(conj);
      }
    }
    // products of the remainder and of the new irreducibles with what is known
    std::vector<ClassFunction> seeds = fresh;
    if (fresh.empty()) seeds.push_back(phi);
    for (const auto& s : seeds) {
      queue.push_back(s * rho);
      queue.push_back(s * rho.conj());
      for (const auto& chi : found) queue.push_back(s * chi);
    }
  }
  return found;
}

}  // namespace singk::verify
