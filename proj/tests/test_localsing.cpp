#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "singk/error.hpp"
#include "singk/localsing.hpp"
#include "singk/presets.hpp"

using namespace singk;
using test::diag;
using test::z;
using test::zmod;

namespace {

const CheckRecord* find_check(const SingInvariants& s, const std::string& name) {
  for (const auto& c : s.checks)
    if (c.name == name) return &c;
  return nullptr;
}

BigInt ipow(long b, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("localsing") {
  TEST_CASE("ADE surface singularities") {
    struct Row {
      const char* name;
      AbelianGroupStructure ksg0;
    };
    const Row rows[] = {{"A1", zmod({2})},    {"A2", zmod({3})},    {"A5", zmod({6})},    {"A8", zmod({9})},
                        {"D4", zmod({2, 2})}, {"D5", zmod({4})},    {"D6", zmod({2, 2})}, {"D7", zmod({4})},
                        {"D9", zmod({4})},    {"E6", zmod({3})},    {"E7", zmod({2})},    {"E8", zmod({})}};
    for (const auto& row : rows) {
      CAPTURE(row.name);
      const Preset p = find_preset(row.name);
      const auto via_table = ksg0_local(p.model());
      REQUIRE(via_table.ksg0.has_value());
      CHECK(*via_table.ksg0 == row.ksg0);
      CHECK(via_table.g0 == AbelianGroupStructure{1, row.ksg0.torsion});
      CHECK(via_table.cl == row.ksg0);
      CHECK(via_table.free_action);
      CHECK(via_table.isolated);
      CHECK(via_table.all_checks_passed());
      CHECK(via_table.annihilator_bound == BigInt(static_cast<long>(p.expected_order)));
      CHECK(local_invariants(p.model()).ksg0 == via_table.ksg0);
    }
  }

  TEST_CASE("1/m(1,1,1)") {
    for (unsigned long m = 2; m <= 12; ++m) {
      CAPTURE(m);
      const auto s = ksg0_cyclic(m, {1, 1, 1});
      const long mm = static_cast<long>(m);
      const auto expected = (m % 2 == 1) ? zmod({mm, mm}) : zmod({mm / 2, 2 * mm});
      CHECK(*s.ksg0 == expected);
      CHECK(s.all_checks_passed());
      CHECK(s.annihilator_bound == ipow(mm, 2));
    }
  }

  TEST_CASE("minus identity") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto s = ksg0_cyclic(2, std::vector<unsigned long>(n, 1));
      CHECK(*s.ksg0 == zmod({1L << (n - 1)}));
    }
    CHECK(*ksg0_cyclic(2, {1, 1, 1, 1, 1}).ksg0 == zmod({16}));
  }

  TEST_CASE("order law") {
    const auto report = validate_order_law(1, 7, 1, 4);
    CHECK(report.size() == 28);
    for (const auto& e : report) {
      CAPTURE(e.m);
      CAPTURE(e.n);
      CHECK(e.ok);
      CHECK(e.order == e.expected);
    }
    for (const auto& e : report)
      if (e.m == 3 && e.n == 4) CHECK(e.order == 27);
  }

  TEST_CASE("cyclic fast path agrees with the character table pipeline") {
    std::mt19937_64 rng(20261016);
    int tried = 0;
    while (tried < 25) {
      const unsigned long m = 2 + rng() % 11;
      const std::size_t n = 1 + rng() % 3;
      std::vector<unsigned long> w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(1 + rng() % m);
      bool coprime = true;
      for (auto a : w) coprime = coprime && std::gcd(a, m) == 1;
      if (!coprime) continue;
      ++tried;
      CAPTURE(m);
      const auto fast = ksg0_cyclic(m, w);
      const auto slow = ksg0_local(LocalModel::cyclic(m, w));
      CHECK(fast.g0 == slow.g0);
      CHECK(fast.ksg0 == slow.ksg0);
      CHECK(fast.cl == slow.cl);
      CHECK(fast.all_checks_passed());
      CHECK(slow.all_checks_passed());
      if (n == 2) CHECK(*fast.ksg0 == fast.cl);
    }
  }

  TEST_CASE("circulant matrix") {
    const IntMatrix m = cyclic_multiplication_matrix(3, {1, 2});
    CHECK(m == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK(*ksg0_cyclic(3, {1, 2}).ksg0 == zmod({3}));
  }

  TEST_CASE("non-free actions are flagged") {
    const auto s = ksg0_cyclic(4, {2, 1});
    CHECK_FALSE(s.free_action);
    CHECK_FALSE(s.isolated);
    CHECK_FALSE(s.ksg0.has_value());
    const auto* c = find_check(s, "cokernel_free_rank_one");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckRecord::Status::NotApplicable);
    CHECK(s.all_checks_passed());

    LocalOptions strict;
    strict.require_free_action = true;
    try {
      (void)ksg0_cyclic(4, {2, 1}, strict);
      FAIL("expected NotFreeAction");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFreeAction);
    }
    auto refl = close_group({diag({CycNum(1), CycNum(-1)})});
    const auto r = ksg0_local(LocalModel::matrix(refl, "reflection"));
    CHECK_FALSE(r.free_action);
    CHECK(r.cl.is_trivial());
  }

  TEST_CASE("class groups") {
    for (unsigned long m = 2; m <= 9; ++m)
      CHECK(class_group(LocalModel::cyclic(m, {1, 1})) == zmod({static_cast<long>(m)}));
    CHECK(class_group(LocalModel::matrix(close_group({diag({CycNum(1), CycNum(-1)})}))).is_trivial());
    CHECK(class_group(LocalModel::matrix(test::quaternion_group())) == zmod({2, 2}));
    // weights (1, m) make every element a reflection
    CHECK(class_group(LocalModel::cyclic(6, {1, 6})).is_trivial());
    // cyclic shortcut versus the matrix path with reflections present
    for (unsigned long m = 2; m <= 12; ++m)
      for (unsigned long a = 1; a <= m; ++a) {
        const auto model = LocalModel::cyclic(m, {a, 1, m});
        CHECK(class_group(model) == class_group(model.as_matrix_model()));
        const auto model2 = LocalModel::cyclic(m, {a, m / 2});
        CHECK(class_group(model2) == class_group(model2.as_matrix_model()));
      }
  }

  TEST_CASE("models") {
    const auto c = LocalModel::cyclic(5, {1, 4});
    CHECK(c.describe() == "1/5(1,4)");
    CHECK(c.group_order() == 5);
    CHECK(c.n == 2);
    CHECK(c.as_matrix_model().group->order() == 5);
    try {
      (void)LocalModel::cyclic(5, {0, 1});
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    CHECK(check_status_from_string("not_applicable") == CheckRecord::Status::NotApplicable);
    CHECK(to_string(CheckRecord::Status::Fail) == "fail");
  }

  TEST_CASE("dual and non-dual Koszul classes give the same group") {
    LocalOptions plain;
    plain.use_dual = false;
    for (const char* name : {"D5", "E6", "E7"}) {
      const auto m = find_preset(name).model();
      CHECK(ksg0_local(m).ksg0 == ksg0_local(m, plain).ksg0);
    }
  }
}
