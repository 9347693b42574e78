#include "singk/characters.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "singk/error.hpp"

namespace singk {

namespace {

unsigned long character_conductor(const FiniteMatrixGroup& g) {
  return lcm_ul(g.conductor(), g.exponent());
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p for p < 2^31.

struct PrimeField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) raise(ErrorCode::AlgorithmFailure, "inverse of zero in prime field");
    return pow(a, p - 2);
  }
  std::uint64_t from(std::size_t v) const { return v % p; }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest prime p = 1 (mod e) with p^2 > 4|G|, so p > 2 * (largest degree).
std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order) {
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

// Element of exact multiplicative order e in F_p.
std::uint64_t primitive_root_of_unity(const PrimeField& f, std::uint64_t e) {
  const auto qs = prime_divisors(f.p - 1);
  for (std::uint64_t g = 2; g < f.p; ++g) {
    bool primitive = true;
    for (auto q : qs)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return f.pow(g, (f.p - 1) / e);
  }
  if (f.p == 2) return 1;
  raise(ErrorCode::AlgorithmFailure, "no primitive root modulo p");
}

using Vec = std::vector<std::uint64_t>;

// Null space of the rows x cols matrix a (row-major) over F_p.
std::vector<Vec> null_space(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, const PrimeField& f) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = f.inv(a[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      const std::uint64_t factor = a[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.sub(0, a[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Class multiplication coefficients: (M_j)[i][k] = #{x in C_j : x^{-1} z_k in C_i}
// where z_k represents C_k. Right eigenvectors of every M_j are the central
// character vectors (omega(C_k))_k.
std::vector<std::uint64_t> class_matrix(const FiniteMatrixGroup& g, std::size_t j, const PrimeField& f) {
  const std::size_t r = g.class_count();
  std::vector<std::uint64_t> m(r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = g.classes()[k].representative;
    for (auto x : g.classes()[j].members) {
      const std::size_t i = g.class_of(g.multiply(g.inverse(x), z));
      m[i * r + k] += 1;
    }
  }
  for (auto& v : m) v %= f.p;
  return m;
}

// Splits `basis` (an M-invariant subspace) into eigenspaces of M.
std::vector<std::vector<Vec>> split_space(const std::vector<std::uint64_t>& m, const std::vector<Vec>& basis,
                                          std::size_t r, const PrimeField& f) {
  const std::size_t k = basis.size();
  // W = M * B, r x k
  std::vector<std::uint64_t> mb(r * k, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < r; ++l) acc = f.add(acc, f.mul(m[i * r + l], basis[c][l]));
      mb[i * k + c] = acc;
    }
  std::vector<std::vector<Vec>> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < f.p && found < k; ++lambda) {
    std::vector<std::uint64_t> a = mb;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < k; ++c) a[i * k + c] = f.sub(a[i * k + c], f.mul(lambda, basis[c][i]));
    const auto coeffs = null_space(std::move(a), r, k, f);
    if (coeffs.empty()) continue;
    std::vector<Vec> space;
    for (const auto& cv : coeffs) {
      Vec v(r, 0);
      for (std::size_t c = 0; c < k; ++c)
        if (cv[c])
          for (std::size_t i = 0; i < r; ++i) v[i] = f.add(v[i], f.mul(cv[c], basis[c][i]));
      space.push_back(std::move(v));
    }
    found += space.size();
    parts.push_back(std::move(space));
  }
  if (found != k) raise(ErrorCode::AlgorithmFailure, "class matrix is not diagonalizable modulo p");
  return parts;
}

bool value_vector_greater(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (lex_less(b[c], a[c])) return true;
    if (lex_less(a[c], b[c])) return false;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(GroupPtr group, std::vector<CycNum> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_ || values_.size() != group_->class_count())
    raise(ErrorCode::DimensionMismatch, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::constant(GroupPtr group, const CycNum& value) {
  const std::size_t r = group->class_count();
  return ClassFunction(std::move(group), std::vector<CycNum>(r, value));
}

ClassFunction ClassFunction::conj() const {
  std::vector<CycNum> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::promoted(unsigned long m) const {
  std::vector<CycNum> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.promote(m));
  return ClassFunction(group_, std::move(v));
}

void ClassFunction::require_same_group(const ClassFunction& other) const {
  if (group_ != other.group_) raise(ErrorCode::GroupMismatch, "class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_group(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_group(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.require_same_group(b);
  std::vector<CycNum> v;
  v.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v.push_back(a[c] * b[c]);
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const BigInt& factor) const {
  std::vector<CycNum> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.scaled(BigRational(factor)));
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& other) const {
  return group_ == other.group_ && values_ == other.values_;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irr_(std::move(irreducibles)) {
  conductor_ = character_conductor(*group_);
  for (auto& chi : irr_) chi = chi.promoted(conductor_);
  for (const auto& chi : irr_) degrees_.push_back(chi.degree_value().to_integer().get_si());
  dual_.resize(irr_.size());
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    const ClassFunction d = irr_[i].conj();
    auto it = std::find(irr_.begin(), irr_.end(), d);
    if (it == irr_.end()) raise(ErrorCode::AlgorithmFailure, "character table is not closed under duality");
    dual_[i] = static_cast<std::size_t>(it - irr_.begin());
  }
}

ClassFunction trace_character(const GroupPtr& group) {
  const unsigned long cond = character_conductor(*group);
  std::vector<CycNum> v;
  for (const auto& cls : group->classes()) v.push_back(group->element(cls.representative).trace().promote(cond));
  return ClassFunction(group, std::move(v));
}

BigRational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) raise(ErrorCode::GroupMismatch, "inner product across different groups");
  const auto& g = *a.group();
  CycNum sum;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += (a[c] * b[c].conj()).scaled(BigRational(static_cast<unsigned long>(g.classes()[c].size())));
  }
  BigRational q = sum.to_rational();
  q /= static_cast<unsigned long>(g.order());
  return q;
}

BigInt integer_inner_product(const ClassFunction& a, const ClassFunction& b) {
  BigRational q;
  try {
    q = inner_product(a, b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotRational) raise(ErrorCode::NotVirtualCharacter, "irrational inner product");
    throw;
  }
  if (q.get_den() != 1) raise(ErrorCode::NotVirtualCharacter, "non-integral inner product " + q.get_str());
  return q.get_num();
}

std::vector<ClassFunction> exterior_power_characters(const ClassFunction& chi, long kmax) {
  const auto& g = *chi.group();
  const CycNum& deg_value = chi.degree_value();
  if (!deg_value.is_rational() || deg_value.coeff(0).get_den() != 1 || deg_value.coeff(0) < 0)
    raise(ErrorCode::DegreeOutOfRange, "character degree is not a nonnegative integer");
  const long degree = deg_value.to_integer().get_si();
  if (kmax < 0 || kmax > degree)
    raise(ErrorCode::DegreeOutOfRange,
          "exterior power " + std::to_string(kmax) + " of a degree " + std::to_string(degree) + " character");

  const std::size_t r = g.class_count();
  // e[k][c]
  std::vector<std::vector<CycNum>> e(static_cast<std::size_t>(kmax) + 1, std::vector<CycNum>(r));
  const unsigned long cond = deg_value.conductor();
  for (std::size_t c = 0; c < r; ++c) e[0][c] = CycNum(BigRational(1), cond);
  for (std::size_t c = 0; c < r; ++c) {
    for (long k = 1; k <= kmax; ++k) {
      CycNum acc(BigRational(0), cond);
      for (long i = 1; i <= k; ++i) {
        const CycNum& p_i = chi[g.power_class(c, i)];
        CycNum term = e[static_cast<std::size_t>(k - i)][c] * p_i;
        if (i % 2 == 1) acc += term;
        else acc -= term;
      }
      CycNum ek = acc.divided_by(k);
      if (!ek.is_algebraic_integer())
        raise(ErrorCode::NonExactDivision, "Newton identity division by " + std::to_string(k) + " is not exact");
      e[static_cast<std::size_t>(k)][c] = std::move(ek);
    }
  }
  std::vector<ClassFunction> out;
  for (auto& values : e) out.emplace_back(chi.group(), std::move(values));
  return out;
}

ClassFunction exterior_power_character(const ClassFunction& chi, long k) {
  if (k < 0) raise(ErrorCode::DegreeOutOfRange, "negative exterior power");
  return exterior_power_characters(chi, k).back();
}

TablePtr character_table(const GroupPtr& group) {
  const auto& g = *group;
  const std::size_t r = g.class_count();
  const std::uint64_t order = g.order();
  const std::uint64_t e = g.exponent();
  const unsigned long cond = character_conductor(g);
  const PrimeField f{choose_prime(e, order)};

  // simultaneous eigenspaces of the class matrices
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    const auto m = class_matrix(g, j, f);
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto& part : split_space(m, space, r, f)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) raise(ErrorCode::AlgorithmFailure, "class matrices did not separate the characters");

  const std::uint64_t w = primitive_root_of_unity(f, e);
  std::vector<ClassFunction> irreducibles;
  for (const auto& space : spaces) {
    Vec omega = space.front();
    if (omega[0] == 0) raise(ErrorCode::AlgorithmFailure, "central character vanishes at the identity");
    const std::uint64_t scale = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, scale);

    // sum_c omega_c omega_{c*} / |C_c| = |G| / d^2
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < r; ++c)
      s = f.add(s, f.mul(f.mul(omega[c], omega[g.inverse_class(c)]), f.inv(f.from(g.classes()[c].size()))));
    const std::uint64_t d2 = f.mul(f.from(order), f.inv(s));
    long degree = 0;
    for (long d = 1; static_cast<std::uint64_t>(d * d) <= order; ++d)
      if (f.mul(f.from(static_cast<std::size_t>(d)), f.from(static_cast<std::size_t>(d))) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) raise(ErrorCode::AlgorithmFailure, "no character degree matches modulo p");

    // chi(g_c) mod p
    Vec theta(r);
    for (std::size_t c = 0; c < r; ++c)
      theta[c] = f.mul(f.mul(f.from(static_cast<std::size_t>(degree)), omega[c]), f.inv(f.from(g.classes()[c].size())));

    std::vector<CycNum> values;
    values.reserve(r);
    for (std::size_t c = 0; c < r; ++c) {
      const std::size_t o = g.element_order(g.classes()[c].representative);
      const std::uint64_t z = f.pow(w, e / o);
      const std::uint64_t zinv = f.inv(z);
      const std::uint64_t oinv = f.inv(f.from(o));
      std::vector<BigRational> poly(cond);
      long total = 0;
      for (std::size_t t = 0; t < o; ++t) {
        std::uint64_t acc = 0;
        const std::uint64_t step = f.pow(zinv, t);
        std::uint64_t zk = 1;
        for (std::size_t k = 0; k < o; ++k) {
          acc = f.add(acc, f.mul(theta[g.power_class(c, static_cast<long>(k))], zk));
          zk = f.mul(zk, step);
        }
        const std::uint64_t mult = f.mul(acc, oinv);
        if (mult > static_cast<std::uint64_t>(degree))
          raise(ErrorCode::AlgorithmFailure, "eigenvalue multiplicity exceeds the degree");
        total += static_cast<long>(mult);
        poly[(t * (cond / o)) % cond] += static_cast<unsigned long>(mult);
      }
      if (total != degree) raise(ErrorCode::AlgorithmFailure, "eigenvalue multiplicities do not sum to the degree");
      values.push_back(CycNum::from_coeffs(cond, poly));
    }
    irreducibles.emplace_back(group, std::move(values));
  }

  std::sort(irreducibles.begin(), irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const BigInt da = a.degree_value().to_integer();
    const BigInt db = b.degree_value().to_integer();
    if (da != db) return da < db;
    const CycNum one(BigRational(1), a[0].conductor());
    const bool ta = std::all_of(a.values().begin(), a.values().end(), [&](const CycNum& x) { return x == one; });
    const bool tb = std::all_of(b.values().begin(), b.values().end(), [&](const CycNum& x) { return x == one; });
    if (ta != tb) return ta;
    return value_vector_greater(a, b);
  });

  // exact validation
  long sum_sq = 0;
  for (const auto& chi : irreducibles) {
    const long d = chi.degree_value().to_integer().get_si();
    sum_sq += d * d;
  }
  if (static_cast<std::uint64_t>(sum_sq) != order) raise(ErrorCode::AlgorithmFailure, "sum of squared degrees is not |G|");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      if (inner_product(irreducibles[i], irreducibles[j]) != (i == j ? 1 : 0))
        raise(ErrorCode::AlgorithmFailure, "irreducible characters are not orthonormal");

  return std::make_shared<CharacterTable>(group, std::move(irreducibles));
}

std::vector<BigInt> decompose(const ClassFunction& phi, const CharacterTable& table) {
  if (phi.group() != table.group()) raise(ErrorCode::GroupMismatch, "class function and table differ in group");
  std::vector<BigInt> coords;
  coords.reserve(table.size());
  for (const auto& chi : table.irreducibles()) coords.push_back(integer_inner_product(phi, chi));
  if (!(realize(coords, table) == phi))
    raise(ErrorCode::NotVirtualCharacter, "class function is not in the span of the irreducibles");
  return coords;
}

ClassFunction realize(const std::vector<BigInt>& coords, const CharacterTable& table) {
  if (coords.size() != table.size()) raise(ErrorCode::DimensionMismatch, "coordinate vector length");
  ClassFunction out = ClassFunction::constant(table.group(), CycNum(BigRational(0), table.conductor()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out += table[i].scaled(coords[i]);
  return out;
}

}  // namespace singk
