#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "singk/characters.hpp"
#include "singk/error.hpp"
#include "singk/presets.hpp"
#include "singk/serialize.hpp"

using namespace singk;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kDataDir = SINGK_PRESET_DIR;

}  // namespace

TEST_SUITE("presets") {
  TEST_CASE("catalog orders and freeness") {
    const auto& cat = preset_catalog();
    CHECK(cat.size() == 17);
    for (const auto& p : cat) {
      CAPTURE(p.name);
      const auto g = p.group();
      CHECK(g->order() == p.expected_order);
      CHECK(acts_freely_off_origin(*g));
      for (std::size_t e = 0; e < g->order(); ++e) CHECK_FALSE(is_reflection(*g, e));
      for (std::size_t e = 0; e < g->order(); ++e) CHECK(g->element(e).determinant() == CycNum(1));
      CHECK(p.ade_label.has_value());
    }
  }

  TEST_CASE("naming conventions") {
    const auto a3 = find_preset("A_3");
    REQUIRE(a3.cyclic.has_value());
    CHECK(a3.cyclic->first == 4);
    CHECK(a3.cyclic->second == std::vector<unsigned long>{1, 3});
    CHECK(a3.expected_order == 4);
    CHECK(find_preset("D4").expected_order == 8);
    CHECK(find_preset("D_12").expected_order == 40);
    CHECK(find_preset("A20").expected_order == 21);
    CHECK(find_preset("E7").expected_order == 48);
    CHECK(find_preset("E8").expected_order == 120);
    CHECK(binary_dihedral_preset(3).group()->order() == 12);
    CHECK(cyclic_preset(5, {1, 2}).expected_order == 5);
    for (const char* bad : {"D3", "A0", "E5", "F4", "foo"}) {
      try {
        (void)find_preset(bad);
        FAIL("expected InvalidLabel");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidLabel);
      }
    }
  }

  TEST_CASE("committed data files match the code constants") {
    std::map<std::string, std::string> sums;
    std::istringstream in(slurp(kDataDir + "/CHECKSUMS"));
    std::string file, sum;
    while (in >> file >> sum) sums[file] = sum;
    REQUIRE(sums.size() == 3);
    for (const char* name : {"E6", "E7", "E8"}) {
      CAPTURE(name);
      const std::string text = slurp(kDataDir + "/" + name + ".json");
      char hex[17];
      std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
      CHECK(sums[std::string(name) + ".json"] == hex);

      const auto doc = json::Json::parse(text);
      const Preset p = find_preset(name);
      CHECK(doc.at("expected_order").get<std::size_t>() == p.expected_order);
      const auto gens = json::generators_from_json(doc.at("group"));
      REQUIRE(gens.size() == p.generators.size());
      for (std::size_t i = 0; i < gens.size(); ++i) CHECK(gens[i] == p.generators[i]);
      CHECK(close_group(gens)->order() == p.expected_order);
    }
  }

  TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  }
}
