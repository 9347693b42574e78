#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "singk/cli.hpp"
#include "singk/serialize.hpp"

using singk::json::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = singk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ksg in JSON mode") {
    const auto r = run({"ksg", "--cyclic", "3:1,1,1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("ksg0") == Json::parse(R"({"free_rank": 0, "invariant_factors": [3, 3]})"));
    CHECK(j.at("g0").at("free_rank") == 1);
  }

  TEST_CASE("presets through the CLI") {
    const auto e8 = run({"ksg", "--preset", "E8", "--json"});
    REQUIRE(e8.code == 0);
    CHECK(Json::parse(e8.out).at("ksg0").at("invariant_factors").empty());
    const auto e8c = run({"ksg", "--preset", "E8", "--checks"});
    CHECK(e8c.code == 0);
    CHECK(e8c.out.find("pass") != std::string::npos);

    const auto g = run({"group", "--preset", "E7", "--json"});
    REQUIRE(g.code == 0);
    CHECK(Json::parse(g.out).at("order") == 48);
    const auto cl = run({"cl", "--preset", "D4", "--json"});
    REQUIRE(cl.code == 0);
    CHECK(Json::parse(cl.out).at("cl").at("invariant_factors") == Json::parse("[2, 2]"));
  }

  TEST_CASE("group files") {
    const std::string path = std::string(SINGK_PRESET_DIR) + "/E6.json";
    const auto r = run({"ksg", "--group", path, "--json"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("ksg0").at("invariant_factors") == Json::parse("[3]"));
  }

  TEST_CASE("character tables and Koszul classes") {
    const auto t = run({"chartab", "--preset", "D4", "--json"});
    REQUIRE(t.code == 0);
    CHECK(Json::parse(t.out).at("irreducibles").size() == 5);
    const auto k = run({"koszul", "--cyclic", "3:1,2", "--matrix", "--json"});
    REQUIRE(k.code == 0);
    CHECK(k.out.find("matrix") != std::string::npos);
  }

  TEST_CASE("tables") {
    const auto th = run({"ade", "--threefolds"});
    REQUIRE(th.code == 0);
    CHECK(th.out.find("A_{2k-1}  k >= 1     xy+z^2+w^{2k}     Z") != std::string::npos);
    CHECK(th.out.find("E_8                  xy+z^3+w^5        0") != std::string::npos);
    const auto cu = run({"ade", "--curves"});
    REQUIRE(cu.code == 0);
    CHECK(cu.out.find("[k^* ⊕ Z; k^{l-2}]") != std::string::npos);
    const auto odp = run({"odp", "--dim", "4", "--json"});
    REQUIRE(odp.code == 0);
    CHECK(odp.out.find("\"degree\": 2") != std::string::npos);
    const auto kn = run({"knorrer", "--chain", "2", "--base", "xy"});
    CHECK(kn.code == 0);
    CHECK(kn.out.find("step 2") != std::string::npos);
  }

  TEST_CASE("global reports") {
    const auto a = run({"assemble", "--dim", "2", "--model", "cyclic:2:1,1", "--model", "cyclic:3:1,2", "--json"});
    REQUIRE(a.code == 0);
    const auto j = Json::parse(a.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("kksg0").at("value").at("invariant_factors") == Json::parse("[6]"));
    const auto w = run({"wps", "--weights", "1,2,3", "--json"});
    REQUIRE(w.code == 0);
    CHECK(Json::parse(w.out).at("annihilator_bound").at("value") == 6);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"ksg"}).code == 2);
    CHECK(run({"ksg", "--preset", "Q9"}).code == 2);
    CHECK(run({"ksg", "--cyclic", "3:x"}).code == 2);
    CHECK(run({"wps", "--weights", "2,4"}).code == 2);
    CHECK(run({"odp", "--dim", "0"}).code == 2);
    CHECK(run({"assemble", "--dim", "2", "--model", "cyclic:4:2,1"}).code == 2);
    const auto r = run({"ade", "--label", "E9", "--json"});
    CHECK(r.code == 2);
    const auto e = Json::parse(r.err);
    CHECK(e.at("error").at("code") == "InvalidLabel");
  }

  TEST_CASE("order limit") {
    CHECK(run({"group", "--preset", "E8", "--max-order", "50"}).code == 2);
    CHECK(run({"group", "--preset", "E8", "--max-order", "120"}).code == 0);
  }

  TEST_CASE("exit code mapping") {
    using singk::ErrorCode;
    using singk::cli::exit_code_for;
    CHECK(exit_code_for(ErrorCode::InvalidArgument) == 2);
    CHECK(exit_code_for(ErrorCode::ParseError) == 2);
    CHECK(exit_code_for(ErrorCode::NotFreeAction) == 2);
    CHECK(exit_code_for(ErrorCode::AlgorithmFailure) == 3);
    CHECK(exit_code_for(ErrorCode::NotVirtualCharacter) == 3);
    CHECK(exit_code_for(ErrorCode::TableMismatch) == 3);
    CHECK(exit_code_for(ErrorCode::NonExactDivision) == 3);
  }

  TEST_CASE("selftest subset") {
    const auto r = run({"selftest", "--only", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  [3]") != std::string::npos);
  }
}
