#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "singk/error.hpp"
#include "singk/intlat.hpp"
#include "singk/presets.hpp"

using namespace singk;
using test::diag;
using test::z;

namespace {

// Naive reference: every pair of elements multiplies to a listed element and
// the product of matrices agrees with the index arithmetic.
void check_closed(const FiniteMatrixGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto idx = g.find(g.element(a) * g.element(b));
      REQUIRE(idx.has_value());
      CHECK(*idx == g.multiply(a, b));
    }
}

std::size_t brute_class_count(const FiniteMatrixGroup& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) cls.insert(g.multiply(g.multiply(h, x), g.inverse(h)));
    classes.insert(cls);
  }
  return classes.size();
}

}  // namespace

TEST_SUITE("matgroup") {
  TEST_CASE("closure of small groups") {
    auto c3 = close_group({diag({z(3), z(3)})});
    CHECK(c3->order() == 3);
    CHECK(c3->class_count() == 3);
    CHECK(c3->exponent() == 3);

    auto q = test::quaternion_group();
    CHECK(q->order() == 8);
    CHECK(q->class_count() == 5);
    CHECK(q->exponent() == 4);
    check_closed(*q);
    CHECK(brute_class_count(*q) == 5);

    auto one = close_group({CycMatrix::identity(3)});
    CHECK(one->order() == 1);
    CHECK(one->class_count() == 1);
  }

  TEST_CASE("identity is index zero and inverses are consistent") {
    auto g = Preset(find_preset("D5")).group();
    CHECK(g->element(0).is_identity());
    for (std::size_t a = 0; a < g->order(); ++a) {
      CHECK(g->multiply(a, g->inverse(a)) == 0);
      CHECK(g->power(a, static_cast<long>(g->element_order(a))) == 0);
      CHECK(g->power(a, -1) == g->inverse(a));
    }
    check_closed(*g);
    CHECK(brute_class_count(*g) == g->class_count());
  }

  TEST_CASE("class sizes sum to the order and divide it") {
    for (const char* name : {"A4", "D4", "D7", "E6", "E7"}) {
      auto g = find_preset(name).group();
      std::size_t total = 0;
      for (const auto& c : g->classes()) {
        total += c.size();
        CHECK(g->order() % c.size() == 0);
      }
      CHECK(total == g->order());
      CHECK(g->classes().front().members == std::vector<std::size_t>{0});
    }
  }

  TEST_CASE("power classes") {
    auto g = find_preset("E6").group();
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      const auto rep = g->classes()[c].representative;
      for (long j = -3; j <= 7; ++j) CHECK(g->power_class(c, j) == g->class_of(g->power(rep, j)));
      CHECK(g->inverse_class(c) == g->power_class(c, -1));
    }
  }

  TEST_CASE("order limit and invalid generators") {
    CHECK_THROWS_AS(close_group({diag({z(7), z(7)})}, 5), Error);
    try {
      (void)close_group({diag({z(7), z(7)})}, 5);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderExceeded);
    }
    try {
      (void)close_group({diag({CycNum(1), CycNum(0)})});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonInvertibleGenerator);
    }
    try {
      (void)close_group({CycMatrix::identity(2), CycMatrix::identity(3)});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("reflections and free actions") {
    auto r = close_group({diag({CycNum(1), CycNum(-1)})});
    CHECK(is_reflection(*r, 1));
    CHECK_FALSE(is_reflection(*r, 0));
    CHECK_FALSE(acts_freely_off_origin(*r));

    auto pm = close_group({diag({CycNum(-1), CycNum(-1)})});
    CHECK_FALSE(is_reflection(*pm, 1));
    CHECK(acts_freely_off_origin(*pm));
    CHECK(acts_freely_off_origin(*test::quaternion_group()));

    auto k4 = close_group({diag({CycNum(1), CycNum(-1)}), diag({CycNum(-1), CycNum(1)})});
    CHECK(k4->order() == 4);
    CHECK(reflection_normal_closure(*k4).size() == 4);
    CHECK(dual_abelianization_of_quotient(*k4, reflection_normal_closure(*k4)).is_trivial());
  }

  TEST_CASE("subgroups and normal closures") {
    auto q = test::quaternion_group();
    const auto i_idx = *q->find(diag({z(4), z(4, 3)}));
    const Subgroup h = subgroup_closure(*q, {i_idx});
    CHECK(h.size() == 4);
    CHECK(is_normal(*q, h));
    CHECK(std::is_sorted(h.begin(), h.end()));

    auto d = find_preset("D5").group();  // binary dihedral of order 12
    std::size_t order4 = 0;
    for (std::size_t a = 0; a < d->order(); ++a)
      if (d->element_order(a) == 4) order4 = a;
    const Subgroup c4 = subgroup_closure(*d, {order4});
    CHECK(c4.size() == 4);
    CHECK_FALSE(is_normal(*d, c4));
    CHECK(normal_closure(*d, {order4}).size() % 4 == 0);
    try {
      (void)dual_abelianization_of_quotient(*d, c4);
      FAIL("expected NotNormal");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotNormal);
    }
  }

  TEST_CASE("abelianization duals") {
    auto pm = close_group({diag({CycNum(-1), CycNum(-1)})});
    CHECK(dual_abelianization_of_quotient(*pm, {0}) == test::zmod({2}));
    auto q = test::quaternion_group();
    CHECK(dual_abelianization_of_quotient(*q, {0}) == test::zmod({2, 2}));
    CHECK(dual_abelianization_of_quotient(*find_preset("E8").group(), {0}).is_trivial());
    CHECK(dual_abelianization_of_quotient(*find_preset("E6").group(), {0}) == test::zmod({3}));
  }

  TEST_CASE("large groups use the word walk") {
    auto big = close_group({diag({z(80), z(80, 79)}), CycMatrix(2, {0, 1, -1, 0})});
    CHECK(big->order() == 160);
    // Z/65 x Z/65 is past the dense-table limit
    auto grid = close_group({diag({z(65), CycNum(1)}), diag({CycNum(1), z(65)})});
    CHECK(grid->order() == 4225);
    CHECK_FALSE(grid->has_dense_table());
    CHECK(grid->class_count() == 4225);
    CHECK(grid->exponent() == 65);
    for (std::size_t a : {17UL, 400UL, 4000UL})
      for (std::size_t b : {1UL, 333UL, 4224UL}) {
        CHECK(grid->element(grid->multiply(a, b)) == grid->element(a) * grid->element(b));
        CHECK(grid->multiply(a, grid->inverse(a)) == 0);
      }
  }
}
