#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "singk/error.hpp"
#include "singk/geomtables.hpp"

using namespace singk;
using test::zmod;

namespace {

FilteredAbelianGroup at(long degree, AbelianGroupStructure g) {
  return FilteredAbelianGroup::from_components({{degree, std::move(g)}});
}

// Numerical semigroup gaps by sieve.
long gaps(long a, long b) {
  const long limit = a * b;
  std::vector<bool> hit(static_cast<std::size_t>(limit + 1), false);
  for (long i = 0; i * a <= limit; ++i)
    for (long j = 0; i * a + j * b <= limit; ++j) hit[static_cast<std::size_t>(i * a + j * b)] = true;
  return std::count(hit.begin() + 1, hit.end(), false);
}

}  // namespace

TEST_SUITE("geomtables") {
  TEST_CASE("Knorrer shift") {
    CHECK(knorrer_shift(at(0, zmod({2}))) == at(1, zmod({2})));
    CHECK(knorrer_shift(at(0, AbelianGroupStructure::free(1))) == at(1, AbelianGroupStructure::free(1)));
    CHECK(knorrer_shift(FilteredAbelianGroup{}).components.empty());
    const auto two = FilteredAbelianGroup::from_components({{0, zmod({2})}, {3, AbelianGroupStructure::free(1)}});
    const auto shifted = knorrer_shift(knorrer_shift(two));
    CHECK(shifted.group == two.group);
    CHECK(shifted.components[0].degree == 2);
    CHECK(shifted.components[1].degree == 5);
    CHECK(knorrer_chain(KnorrerBase::DoublePoint, 3) == at(3, zmod({2})));
  }

  TEST_CASE("ordinary double points") {
    CHECK(odp_invariants(4) == at(2, zmod({2})));
    CHECK(odp_invariants(3) == at(1, AbelianGroupStructure::free(1)));
    CHECK(odp_invariants(1) == at(0, AbelianGroupStructure::free(1)));
    for (long n = 1; n <= 12; ++n) {
      const auto o = odp_invariants(n);
      REQUIRE(o.components.size() == 1);
      CHECK(o.components[0].degree == (n % 2 == 0 ? n / 2 : (n - 1) / 2));
      CHECK(o.group == (n % 2 == 0 ? zmod({2}) : AbelianGroupStructure::free(1)));
    }
  }

  TEST_CASE("Sylvester counts") {
    CHECK(sylvester_count(2, 3) == 1);
    CHECK(sylvester_count(3, 5) == 4);
    CHECK(sylvester_count(1, 7) == 0);
    for (long a = 1; a <= 30; ++a)
      for (long b = 1; b <= 30; ++b) {
        if (std::gcd(a, b) != 1) continue;
        CHECK(sylvester_count(a, b) == gaps(a, b));
        CHECK(sylvester_closed_form(a, b) == sylvester_enumerate(a, b));
      }
    try {
      (void)sylvester_count(4, 6);
      FAIL("expected NotCoprime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCoprime);
    }
  }

  TEST_CASE("ADE curves") {
    const auto a4 = ade_curve_invariants("A_4");
    CHECK(a4.components == 1);
    CHECK(a4.ksg0.is_trivial());
    CHECK(a4.pic_dim == 2);
    CHECK(a4.cusp == std::pair<long, long>{2, 5});
    CHECK(a4.ksg1.render() == "k^2");

    const auto d4 = ade_curve_invariants("D4");
    CHECK(d4.components == 3);
    CHECK(d4.ksg0 == AbelianGroupStructure::free(2));
    CHECK(d4.ksg1.render() == "(k^* ⊕ Z)^2");

    const auto e7 = ade_curve_invariants("E_7");
    CHECK(e7.components == 2);
    CHECK(e7.ksg1.render() == "[k^* ⊕ Z; k]");

    CHECK(ade_curve_invariants("E6").pic_dim == 3);
    CHECK(ade_curve_invariants("E8").pic_dim == 4);
    CHECK(ade_curve_invariants("A_{5}").ksg1.render() == "k^* ⊕ Z");
    for (long l = 3; l <= 10; ++l) {
      const auto d = ade_curve_invariants("D" + std::to_string(2 * l - 1));
      CHECK(d.pic_dim == l - 2);
      CHECK(d.cusp == std::pair<long, long>{2, 2 * l - 3});
    }
    for (const char* bad : {"A0", "D3", "E9", "X4", "", "A_x"}) {
      CAPTURE(bad);
      try {
        (void)ade_curve_invariants(bad);
        FAIL("expected InvalidLabel");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidLabel);
      }
    }
  }

  TEST_CASE("curve invariants match the family rows") {
    for (const auto& row : ade_curve_table()) {
      CAPTURE(row.family);
      const auto rec = ade_curve_invariants(row.first_label);
      CHECK(rec.family == row.family);
      CHECK(rec.components == row.components);
      CHECK(rec.ksg0 == row.ksg0);
      CHECK(rec.ksg0 == AbelianGroupStructure::free(static_cast<std::size_t>(rec.components - 1)));
      if (rec.parameter) {
        CHECK(rec.ksg1 == row.ksg1.evaluated(*rec.parameter).normalized());
        CHECK(SymbolicGroupExpr::vector_space(AffineDim::fixed(rec.pic_dim)).normalized() ==
              row.pic.evaluated(*rec.parameter).normalized());
      } else {
        CHECK(rec.ksg1 == row.ksg1.normalized());
      }
    }
  }

  TEST_CASE("threefolds") {
    CHECK(ade_threefold_class_group("A_3") == AbelianGroupStructure::free(1));
    CHECK(ade_threefold_class_group("A_4").is_trivial());
    CHECK(ade_threefold_class_group("D_6") == AbelianGroupStructure::free(2));
    CHECK(ade_threefold_class_group("D_7") == AbelianGroupStructure::free(1));
    CHECK(ade_threefold_class_group("E_6").is_trivial());
    CHECK(ade_threefold_class_group("E_7") == AbelianGroupStructure::free(1));
    CHECK(ade_threefold_class_group("E_8").is_trivial());
    for (const auto& row : ade_threefold_table()) CHECK(ade_threefold_class_group(row.first_label) == row.cl);
    CHECK(ade_threefold_table().size() == 7);
    CHECK(ade_curve_table().size() == 7);
  }

  TEST_CASE("symbolic expressions render and parse") {
    const auto ks = SymbolicGroupExpr::product({SymbolicGroupExpr::units(), SymbolicGroupExpr::integers()});
    const auto e = SymbolicGroupExpr::extension(ks, SymbolicGroupExpr::vector_space({-2, 1, "l"}));
    CHECK(e.render() == "[k^* ⊕ Z; k^{l-2}]");
    CHECK(e.evaluated(3).normalized().render() == "[k^* ⊕ Z; k]");
    CHECK(e.evaluated(2).normalized().render() == "k^* ⊕ Z");
    for (const char* text : {"k^l", "k^* ⊕ Z", "(k^* ⊕ Z)^2", "[k^* ⊕ Z; k^{l-2}]", "[k^* ⊕ Z; k]", "Z", "k^4", "0"}) {
      CAPTURE(text);
      CHECK(SymbolicGroupExpr::parse(text).render() == text);
    }
    CHECK(SymbolicGroupExpr::parse("k^{*} + Z") == SymbolicGroupExpr::parse("k^* ⊕ Z"));
    CHECK_THROWS_AS(SymbolicGroupExpr::parse("[k; "), Error);
    for (const auto& row : ade_curve_table()) {
      CHECK(SymbolicGroupExpr::parse(row.ksg1.render()) == row.ksg1);
      CHECK(SymbolicGroupExpr::parse(row.pic.render()) == row.pic);
    }
  }
}
