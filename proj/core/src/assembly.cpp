#include "singk/assembly.hpp"

#include <numeric>

#include "singk/error.hpp"

namespace singk {

bool GlobalReport::all_checks_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckRecord::Status::Fail) return false;
  return true;
}

GlobalReport assemble(const GlobalSingularityData& data) {
  GlobalReport report;
  report.n = data.n;
  std::vector<AbelianGroupStructure> ksg0s;
  std::vector<AbelianGroupStructure> cls;
  BigInt lcm_orders = 1;
  for (std::size_t i = 0; i < data.local_models.size(); ++i) {
    const LocalModel& model = data.local_models[i];
    if (model.n != data.n)
      raise(ErrorCode::DimensionMismatch, "local model " + std::to_string(i) + " has dimension " +
                                              std::to_string(model.n) + ", expected " + std::to_string(data.n));
    const SingInvariants s = local_invariants(model);
    if (!s.free_action || !s.ksg0)
      raise(ErrorCode::NotFreeAction, "local model " + std::to_string(i) + " (" + model.describe() +
                                          ") does not act freely off the origin");
    report.locals.push_back({model.describe(), s.group_order, *s.ksg0, s.cl});
    ksg0s.push_back(*s.ksg0);
    cls.push_back(s.cl);
    mpz_lcm(lcm_orders.get_mpz_t(), lcm_orders.get_mpz_t(), s.group_order.get_mpz_t());
  }
  report.kksg0 = direct_sum(ksg0s);
  mpz_pow_ui(report.annihilator_bound.get_mpz_t(), lcm_orders.get_mpz_t(), data.n == 0 ? 0 : data.n - 1);

  const auto e = group_exponent(report.kksg0);
  const bool divides = e && mpz_divisible_p(report.annihilator_bound.get_mpz_t(), e->get_mpz_t());
  report.checks.push_back({"exponent_divides_lcm_bound", divides ? CheckRecord::Status::Pass : CheckRecord::Status::Fail,
                           "exponent " + (e ? e->get_str() : std::string("infinite")) + ", bound " +
                               report.annihilator_bound.get_str()});
  if (data.n == 2) {
    report.surface_formula = direct_sum(cls);
    report.checks.push_back({"surface_kksg0_equals_class_groups",
                             *report.surface_formula == report.kksg0 ? CheckRecord::Status::Pass
                                                                     : CheckRecord::Status::Fail,
                             report.surface_formula->to_string()});
  }

  report.flags = {
      {"ksg1_zero", "true", "K^sg_1(X) = 0 for isolated quotient singularities"},
      {"k_minus_j_zero", "true", "K_{-j}(X) = 0 for all j >= 1"},
      {"pd_injective", "true", "K_0(X) -> G_0(X) is injective"},
      {"length_map_iso", "true", "the length map on the singular points is an isomorphism"},
      {"ksg0_subgroup", "true", "K^sg_0(X) is a subgroup of the reported upper group; it is not computed"},
  };
  return report;
}

GlobalSingularityData wps_singularity_data(const std::vector<unsigned long>& weights) {
  if (weights.empty()) raise(ErrorCode::InvalidArgument, "at least one weight is required");
  for (auto a : weights)
    if (a == 0) raise(ErrorCode::InvalidArgument, "weights must be positive");
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (std::gcd(weights[i], weights[j]) != 1)
        raise(ErrorCode::NotPairwiseCoprime, "weights " + std::to_string(weights[i]) + " and " +
                                                 std::to_string(weights[j]) + " share a factor");
  GlobalSingularityData data;
  data.n = weights.size() - 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const unsigned long a = weights[i];
    if (a == 1) continue;
    std::vector<unsigned long> rest;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (j != i) rest.push_back(weights[j] % a);
    data.local_models.push_back(LocalModel::cyclic(a, std::move(rest)));
  }
  return data;
}

GlobalReport wps_report(const std::vector<unsigned long>& weights) {
  GlobalReport report = assemble(wps_singularity_data(weights));
  const std::string rank = std::to_string(weights.size());
  report.flags.push_back({"k0_rank", rank, "K_0(X) = Z^(n+1)"});
  report.flags.push_back({"g0_rank", rank, "rank G_0(X) = n+1"});
  return report;
}

}  // namespace singk
