#include "singk/localsing.hpp"

#include <numeric>

#include "singk/characters.hpp"
#include "singk/error.hpp"
#include "singk/repring.hpp"

namespace singk {

namespace {

using Status = CheckRecord::Status;

BigInt pow_big(const BigInt& base, std::size_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

CheckRecord make_check(std::string name, bool applicable, bool ok, std::string detail = {}) {
  return {std::move(name), !applicable ? Status::NotApplicable : ok ? Status::Pass : Status::Fail,
          std::move(detail)};
}

// Fills everything derived from the multiplication matrix and the class group.
SingInvariants finish(const IntMatrix& mult, std::size_t n, const BigInt& order, bool free_action, bool isolated,
                      AbelianGroupStructure cl, std::vector<CheckRecord> checks, const LocalOptions& options) {
  if (!free_action && options.require_free_action)
    raise(ErrorCode::NotFreeAction, "the group does not act freely off the origin");
  SingInvariants s;
  s.dimension = n;
  s.group_order = order;
  s.g0 = cokernel(mult);
  s.cl = std::move(cl);
  s.free_action = free_action;
  s.isolated = isolated;
  s.annihilator_bound = n == 0 ? BigInt(1) : pow_big(order, n - 1);
  if (free_action) s.ksg0 = s.g0.torsion_part();

  checks.push_back(make_check("cokernel_free_rank_one", free_action, s.g0.free_rank == 1,
                              "free rank " + std::to_string(s.g0.free_rank)));
  const std::size_t kr = kernel_rank(mult);
  checks.push_back(make_check("kernel_rank_one", free_action, kr == 1, "kernel rank " + std::to_string(kr)));
  if (free_action) {
    const auto e = group_exponent(*s.ksg0);
    checks.push_back(make_check("exponent_divides_bound", true, e && divides(*e, s.annihilator_bound),
                                "exponent " + (e ? e->get_str() : std::string("infinite")) + ", bound " +
                                    s.annihilator_bound.get_str()));
  } else {
    checks.push_back(make_check("exponent_divides_bound", false, false));
  }
  checks.push_back(make_check("surface_ksg0_equals_cl", free_action && n == 2, s.ksg0 && *s.ksg0 == s.cl,
                              "cl " + s.cl.to_string()));
  s.checks = std::move(checks);
  return s;
}

}  // namespace

LocalModel LocalModel::matrix(GroupPtr group, std::string label) {
  if (!group) raise(ErrorCode::InvalidArgument, "null group");
  LocalModel model;
  model.kind = Kind::MatrixGroup;
  model.n = group->dimension();
  model.group = std::move(group);
  model.label = std::move(label);
  return model;
}

LocalModel LocalModel::cyclic(unsigned long m, std::vector<unsigned long> weights) {
  if (m == 0) raise(ErrorCode::InvalidArgument, "modulus must be positive");
  for (auto a : weights)
    if (a < 1 || a > m)
      raise(ErrorCode::InvalidArgument, "weight " + std::to_string(a) + " outside [1, " + std::to_string(m) + "]");
  LocalModel model;
  model.kind = Kind::CyclicWeights;
  model.m = m;
  model.n = weights.size();
  model.weights = std::move(weights);
  model.label = model.describe();
  return model;
}

std::size_t LocalModel::group_order() const { return kind == Kind::MatrixGroup ? group->order() : m; }

LocalModel LocalModel::as_matrix_model(std::size_t max_order) const {
  if (kind == Kind::MatrixGroup) return *this;
  if (n == 0) raise(ErrorCode::InvalidArgument, "a matrix model needs at least one weight");
  std::vector<CycNum> diag;
  for (auto a : weights) diag.push_back(CycNum::zeta(m, static_cast<long>(a % m)));
  LocalModel out = matrix(close_group({CycMatrix::diagonal(diag)}, max_order), describe());
  return out;
}

std::string LocalModel::describe() const {
  if (kind == Kind::MatrixGroup) return label;
  std::string s = "1/" + std::to_string(m) + "(";
  for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
  return s + ")";
}

std::string to_string(CheckRecord::Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "fail";
}

CheckRecord::Status check_status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "not_applicable") return Status::NotApplicable;
  raise(ErrorCode::ParseError, "unknown check status '" + s + "'");
}

bool SingInvariants::all_checks_passed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

AbelianGroupStructure class_group(const LocalModel& model) {
  if (model.kind == LocalModel::Kind::MatrixGroup)
    return dual_abelianization_of_quotient(*model.group, reflection_normal_closure(*model.group));
  // g^k is a reflection iff exactly one coordinate moves; N = <g^d>, G/N = Z_d.
  // Start from the order of g, which is smaller than m when the weights share a factor with m.
  unsigned long d = model.m;
  for (auto a : model.weights) d = std::gcd(d, a % model.m);
  d = model.m / d;
  for (unsigned long k = 1; k < model.m; ++k) {
    std::size_t moving = 0;
    for (auto a : model.weights)
      if ((k * a) % model.m != 0) ++moving;
    if (moving == 1) d = std::gcd(d, k);
  }
  return AbelianGroupStructure::from_cyclic_orders({BigInt(d)});
}

IntMatrix cyclic_multiplication_matrix(unsigned long m, const std::vector<unsigned long>& weights) {
  std::vector<BigInt> r(m);
  r[0] = 1;
  for (auto a : weights) {
    // r *= (1 - x^a)
    std::vector<BigInt> next = r;
    for (unsigned long k = 0; k < m; ++k) next[(k + a) % m] -= r[k];
    r = std::move(next);
  }
  IntMatrix mat(m, m);
  for (unsigned long i = 0; i < m; ++i)
    for (unsigned long j = 0; j < m; ++j) mat(i, j) = r[(i + m - j) % m];
  return mat;
}

SingInvariants ksg0_cyclic(unsigned long m, const std::vector<unsigned long>& weights, const LocalOptions& options) {
  const LocalModel model = LocalModel::cyclic(m, weights);
  bool free_action = true;
  for (auto a : weights)
    if (std::gcd(a, m) != 1) free_action = false;
  const AbelianGroupStructure cl = class_group(model);
  // with a free action a reflection exists only on the line
  const bool isolated = free_action && (m == 1 || weights.size() >= 2);
  return finish(cyclic_multiplication_matrix(m, weights), weights.size(), BigInt(m), free_action, isolated, cl, {},
                options);
}

SingInvariants ksg0_local(const LocalModel& input, const LocalOptions& options) {
  const LocalModel model = input.as_matrix_model();
  const GroupPtr& g = model.group;
  const bool free_action = acts_freely_off_origin(*g);
  bool reflections = false;
  for (const auto& cls : g->classes())
    if (is_reflection(*g, cls.representative)) reflections = true;

  const TablePtr table = character_table(g);
  const VirtualCharacter r = koszul_class(g, table, options.use_dual);

  std::vector<CheckRecord> checks;
  {
    // r(g) = prod (1 - conj(lambda_i)) vanishes exactly where g has eigenvalue 1
    const ClassFunction rv = r.realize();
    bool ok = true;
    for (std::size_t c = 0; c < rv.size(); ++c) {
      const bool fixed = c == g->class_of(FiniteMatrixGroup::identity()) ||
                         (g->element(g->classes()[c].representative) -
                          CycMatrix::identity(g->dimension(), g->conductor()))
                             .determinant()
                             .is_zero();
      if (rv[c].is_zero() != fixed) ok = false;
    }
    checks.push_back(make_check("koszul_support", true, ok));
  }
  return finish(multiplication_matrix(r), g->dimension(), BigInt(static_cast<unsigned long>(g->order())),
                free_action, free_action && !reflections, class_group(model), std::move(checks), options);
}

SingInvariants local_invariants(const LocalModel& model, const LocalOptions& options) {
  if (model.kind == LocalModel::Kind::CyclicWeights) return ksg0_cyclic(model.m, model.weights, options);
  return ksg0_local(model, options);
}

std::vector<OrderLawEntry> validate_order_law(unsigned long m_min, unsigned long m_max, std::size_t n_min,
                                              std::size_t n_max) {
  std::vector<OrderLawEntry> out;
  for (unsigned long m = m_min; m <= m_max; ++m) {
    for (std::size_t n = n_min; n <= n_max; ++n) {
      OrderLawEntry e;
      e.m = m;
      e.n = n;
      e.expected = pow_big(BigInt(m), n == 0 ? 0 : n - 1);
      const auto s = ksg0_cyclic(m, std::vector<unsigned long>(n, 1));
      const auto order = s.ksg0 ? s.ksg0->order() : std::nullopt;
      e.order = order ? *order : BigInt(0);
      e.ok = order && *order == e.expected;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace singk
