#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "singk/characters.hpp"
#include "singk/error.hpp"
#include "singk/presets.hpp"
#include "singk/verify/oracles.hpp"

using namespace singk;
using test::diag;
using test::z;

namespace {

// Value lists normalized to a common conductor, compared as multisets.
std::vector<std::vector<CycNum>> value_rows(const std::vector<ClassFunction>& chars, unsigned long m) {
  std::vector<std::vector<CycNum>> rows;
  for (const auto& chi : chars) rows.push_back(chi.promoted(m).values());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  });
  return rows;
}

void check_table_axioms(const GroupPtr& g, const CharacterTable& t) {
  REQUIRE(t.size() == g->class_count());
  long sum_sq = 0;
  for (long d : t.degrees()) sum_sq += d * d;
  CHECK(static_cast<std::size_t>(sum_sq) == g->order());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i].degree_value() == CycNum(t.degrees()[i]));
    CHECK(g->order() % static_cast<std::size_t>(t.degrees()[i]) == 0);
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(inner_product(t[i], t[j]) == (i == j ? 1 : 0));
    CHECK(t[t.dual_index(i)] == t[i].conj());
  }
  // column orthogonality: sum_chi chi(a) conj(chi(b)) = delta |C_G(a)|
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      CycNum s;
      for (std::size_t i = 0; i < t.size(); ++i) s += t[i][a] * t[i][b].conj();
      const long centralizer = static_cast<long>(g->order() / g->classes()[a].size());
      CHECK(s == CycNum(a == b ? centralizer : 0));
    }
  CHECK(std::is_sorted(t.degrees().begin(), t.degrees().end()));
  CHECK(t[0] == ClassFunction::constant(g, CycNum(1)));
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("trace characters") {
    auto pm = close_group({diag({CycNum(-1), CycNum(-1)})});
    const auto chi = trace_character(pm);
    CHECK(chi[0] == CycNum(2));
    CHECK(chi[1] == CycNum(-2));
    CHECK(inner_product(chi, chi) == 4);
  }

  TEST_CASE("inner products") {
    auto c3 = close_group({diag({z(3)})});
    const auto chi = trace_character(c3);
    CHECK(inner_product(chi, chi) == 1);
    CHECK(inner_product(chi, chi.conj()) == 0);
    CHECK(integer_inner_product(chi + chi, chi) == 2);
    const ClassFunction half(c3, {CycNum(BigRational(1, 2)), CycNum(0), CycNum(0)});
    CHECK(inner_product(half, ClassFunction::constant(c3, 1)) == BigRational(1, 6));
    try {
      (void)integer_inner_product(half, ClassFunction::constant(c3, 1));
      FAIL("expected NotVirtualCharacter");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotVirtualCharacter);
    }
    auto other = close_group({diag({CycNum(-1)})});
    try {
      (void)inner_product(chi, trace_character(other));
      FAIL("expected GroupMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GroupMismatch);
    }
  }

  TEST_CASE("exterior powers") {
    // rotation by a quarter turn: Lambda^2 = det = 1
    auto rot = close_group({CycMatrix(2, {0, -1, 1, 0})});
    const auto chi = trace_character(rot);
    CHECK(exterior_power_character(chi, 2) == ClassFunction::constant(rot, 1));
    CHECK(exterior_power_character(chi, 0) == ClassFunction::constant(rot, 1));
    CHECK(exterior_power_character(chi, 1) == chi);

    auto triv = close_group({CycMatrix::identity(4)});
    const auto lam = exterior_power_characters(trace_character(triv), 4);
    const long binom[] = {1, 4, 6, 4, 1};
    for (int k = 0; k <= 4; ++k) CHECK(lam[k][0] == CycNum(binom[k]));

    try {
      (void)exterior_power_character(chi, 3);
      FAIL("expected DegreeOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeOutOfRange);
    }
  }

  TEST_CASE("top exterior power is the determinant") {
    for (const char* name : {"D4", "D6", "E6", "E7"}) {
      auto g = find_preset(name).group();
      const auto top = exterior_power_character(trace_character(g), 2);
      for (std::size_t c = 0; c < g->class_count(); ++c)
        CHECK(top[c] == g->element(g->classes()[c].representative).determinant());
    }
    auto g3 = cyclic_preset(5, {1, 2, 4}).group();
    const auto top = exterior_power_character(trace_character(g3), 3);
    for (std::size_t c = 0; c < g3->class_count(); ++c)
      CHECK(top[c] == g3->element(g3->classes()[c].representative).determinant());
  }

  TEST_CASE("known degree lists") {
    auto q = test::quaternion_group();
    auto tq = character_table(q);
    CHECK(tq->degrees() == std::vector<long>{1, 1, 1, 1, 2});
    check_table_axioms(q, *tq);

    auto t = character_table(find_preset("E6").group());
    CHECK(t->degrees() == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
    auto o = character_table(find_preset("E7").group());
    CHECK(o->degrees() == std::vector<long>{1, 1, 2, 2, 2, 3, 3, 4});
    auto i = character_table(find_preset("E8").group());
    CHECK(i->degrees() == std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  }

  TEST_CASE("tables satisfy the orthogonality relations") {
    for (const char* name : {"A1", "A5", "D4", "D5", "D9", "E6", "E7", "E8"}) {
      CAPTURE(name);
      auto g = find_preset(name).group();
      check_table_axioms(g, *character_table(g));
    }
    auto g3 = cyclic_preset(7, {1, 2, 4}).group();
    check_table_axioms(g3, *character_table(g3));
    // non-abelian order 21 subgroup of GL_3
    auto f21 = close_group({diag({z(7), z(7, 2), z(7, 4)}), CycMatrix(3, {0, 0, 1, 1, 0, 0, 0, 1, 0})});
    CHECK(f21->order() == 21);
    check_table_axioms(f21, *character_table(f21));
  }

  TEST_CASE("Dixon tables match the saturation oracle") {
    for (const char* name : {"A3", "D4", "D6", "E6", "E7", "E8"}) {
      CAPTURE(name);
      auto g = find_preset(name).group();
      auto t = character_table(g);
      const auto oracle = verify::saturation_character_table(g);
      REQUIRE(oracle.size() == t->size());
      const unsigned long m = t->conductor();
      CHECK(value_rows(oracle, m) == value_rows(t->irreducibles(), m));
    }
  }

  TEST_CASE("linear characters match the oracle count") {
    for (const char* name : {"D4", "D5", "E6", "E7", "E8"}) {
      auto g = find_preset(name).group();
      auto t = character_table(g);
      const auto linear = std::count(t->degrees().begin(), t->degrees().end(), 1L);
      CHECK(static_cast<std::size_t>(linear) == verify::linear_characters(*g).size());
    }
  }

  TEST_CASE("Galois conjugates of irreducibles are irreducible") {
    auto g = find_preset("E8").group();
    auto t = character_table(g);
    for (const auto& chi : t->irreducibles()) {
      const auto sigma = verify::galois_conjugate(chi, 7);
      CHECK(inner_product(sigma, sigma) == 1);
      CHECK(std::find(t->irreducibles().begin(), t->irreducibles().end(), sigma) != t->irreducibles().end());
    }
  }

  TEST_CASE("decompose and realize") {
    auto c3 = close_group({diag({z(3)})});
    auto t = character_table(c3);
    const ClassFunction regular(c3, {CycNum(3), CycNum(0), CycNum(0)});
    CHECK(decompose(regular, *t) == std::vector<BigInt>{1, 1, 1});

    std::mt19937_64 rng(20261016);
    for (const char* name : {"D5", "E7"}) {
      auto g = find_preset(name).group();
      auto tab = character_table(g);
      for (int rep = 0; rep < 10; ++rep) {
        std::vector<BigInt> coords;
        for (std::size_t i = 0; i < tab->size(); ++i) coords.emplace_back(static_cast<long>(rng() % 11) - 5);
        CHECK(decompose(realize(coords, *tab), *tab) == coords);
      }
    }
    const ClassFunction bad(c3, {CycNum(1), CycNum(0), CycNum(0)});
    try {
      (void)decompose(bad, *t);
      FAIL("expected NotVirtualCharacter");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotVirtualCharacter);
    }
  }

  TEST_CASE("tables are deterministic") {
    auto a = character_table(find_preset("E7").group());
    auto b = character_table(find_preset("E7").group());
    for (std::size_t i = 0; i < a->size(); ++i) CHECK((*a)[i].values() == (*b)[i].values());
  }
}
