#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "singk/assembly.hpp"
#include "singk/error.hpp"
#include "singk/presets.hpp"

using namespace singk;
using test::zmod;

namespace {

const CitedFlag* flag(const GlobalReport& r, const std::string& name) {
  for (const auto& f : r.flags)
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace

TEST_SUITE("assembly") {
  TEST_CASE("surface examples") {
    const auto one = assemble({2, {LocalModel::cyclic(2, {1, 1})}});
    CHECK(one.kksg0 == zmod({2}));
    CHECK(one.annihilator_bound == 2);
    CHECK(one.surface_formula == zmod({2}));
    CHECK(one.all_checks_passed());

    const auto two = assemble({2, {LocalModel::cyclic(2, {1, 1}), LocalModel::cyclic(3, {1, 2})}});
    CHECK(two.kksg0 == zmod({6}));
    CHECK(two.annihilator_bound == 6);

    const auto mixed = assemble({2, {find_preset("E6").model(), find_preset("D4").model(), find_preset("E8").model()}});
    CHECK(mixed.kksg0 == zmod({2, 6}));
    CHECK(mixed.annihilator_bound == 120);
    CHECK(mixed.all_checks_passed());
  }

  TEST_CASE("smooth varieties") {
    const auto r = assemble({3, {}});
    CHECK(r.kksg0.is_trivial());
    CHECK(r.annihilator_bound == 1);
    CHECK(r.all_checks_passed());
    for (const char* name : {"ksg1_zero", "k_minus_j_zero", "pd_injective", "length_map_iso", "ksg0_subgroup"})
      CHECK(flag(r, name) != nullptr);
  }

  TEST_CASE("permutation invariance") {
    std::vector<LocalModel> models = {LocalModel::cyclic(4, {1, 1, 1}), LocalModel::cyclic(3, {1, 1, 2}),
                                      LocalModel::cyclic(5, {1, 2, 3}), LocalModel::cyclic(2, {1, 1, 1})};
    const auto base = assemble({3, models});
    std::mt19937_64 rng(20261016);
    for (int t = 0; t < 6; ++t) {
      std::shuffle(models.begin(), models.end(), rng);
      const auto r = assemble({3, models});
      CHECK(r.kksg0 == base.kksg0);
      CHECK(r.annihilator_bound == base.annihilator_bound);
    }
    CHECK(base.annihilator_bound == BigInt(60 * 60));
    CHECK_FALSE(base.surface_formula.has_value());
  }

  TEST_CASE("errors") {
    try {
      (void)assemble({2, {LocalModel::cyclic(2, {1, 1}), LocalModel::cyclic(4, {2, 1})}});
      FAIL("expected NotFreeAction");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFreeAction);
      CHECK(std::string(e.what()).find('1') != std::string::npos);
    }
    try {
      (void)assemble({3, {LocalModel::cyclic(2, {1, 1})}});
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("weighted projective spaces") {
    const auto d = wps_singularity_data({1, 2, 3});
    REQUIRE(d.local_models.size() == 2);
    CHECK(d.n == 2);
    CHECK(d.local_models[0].describe() == "1/2(1,1)");
    CHECK(d.local_models[1].describe() == "1/3(1,2)");
    CHECK(wps_singularity_data({1, 1, 1}).local_models.empty());
    CHECK(wps_singularity_data({1, 1, 2}).local_models.size() == 1);
    CHECK(wps_singularity_data({1, 1, 2}).local_models[0].describe() == "1/2(1,1)");

    const auto r = wps_report({1, 2, 3});
    CHECK(r.kksg0 == zmod({6}));
    REQUIRE(flag(r, "k0_rank") != nullptr);
    CHECK(flag(r, "k0_rank")->value == "3");

    const auto d235 = wps_singularity_data({2, 3, 5});
    REQUIRE(d235.local_models.size() == 3);
    CHECK(d235.local_models[1].describe() == "1/3(2,2)");
    CHECK(d235.local_models[2].describe() == "1/5(2,3)");
    const auto r235 = wps_report({2, 3, 5});
    std::vector<AbelianGroupStructure> parts;
    for (const auto& m : d235.local_models) parts.push_back(*ksg0_cyclic(m.m, m.weights).ksg0);
    CHECK(r235.kksg0 == direct_sum(parts));
    CHECK(r235.all_checks_passed());

    CHECK(wps_report({1}).kksg0.is_trivial());

    std::mt19937_64 rng(3);
    const unsigned long primes[] = {1, 1, 2, 3, 5, 7};
    for (int t = 0; t < 8; ++t) {
      std::vector<unsigned long> w(std::begin(primes), std::end(primes));
      std::shuffle(w.begin(), w.end(), rng);
      w.resize(3 + rng() % 2);
      const auto data = wps_singularity_data(w);
      CHECK(data.local_models.size() == static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto a) { return a > 1; })));
      CHECK(wps_report(w).all_checks_passed());
    }
    try {
      (void)wps_singularity_data({2, 4, 1});
      FAIL("expected NotPairwiseCoprime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPairwiseCoprime);
    }
  }
}
