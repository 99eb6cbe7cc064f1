#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "algknot/cli.hpp"
#include "algknot/numbers.hpp"
#include "algknot/puiseux.hpp"

using namespace algknot;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run_cli(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("info reproduces the worked example") {
  const auto j = run_json({"info", "--puiseux", "12;18,22,25"});
  CHECK(j["genus"] == "105");
  CHECK(j["milnor"] == "210");
  CHECK(j["semigroup_generators"] == json({"12", "18", "40", "123"}));
  CHECK(j["cable_stages"] == json::array({{"2", "3"}, {"3", "20"}, {"2", "123"}}));
  CHECK(j["gcd_chain"] == json({"12", "6", "2", "1"}));
  CHECK(j["tau"] == "105");
}

TEST_CASE("info accepts torus input") {
  const auto j = run_json({"info", "--torus", "5", "3"});
  CHECK(j["knot"] == "T(3,5)");
  CHECK(j["genus"] == "4");
}

TEST_CASE("invalid knots exit with code 2") {
  CHECK(run_cli({"info", "--puiseux", "4;6,8"}).code == 2);
  CHECK(run_cli({"info", "--torus", "4", "6"}).code == 2);
  CHECK(run_cli({"upsilon", "--puiseux", "nonsense"}).code == 2);
}

TEST_CASE("missing knot or subcommand is a usage error") {
  CHECK(run_cli({"info"}).code == 1);
  CHECK(run_cli({}).code == 1);
}

TEST_CASE("upsilon breakpoints and evaluations") {
  const auto j = run_json({"upsilon", "--torus", "4", "5", "--at", "2/3"});
  CHECK(j["first_singularity"] == "1/2");
  CHECK(j["tau"] == "6");
  CHECK(j["breakpoints"] == json({{{"t", "0"}, {"v", "0"}},
                                  {{"t", "1/2"}, {"v", "-3"}},
                                  {{"t", "1"}, {"v", "-4"}}}));
  CHECK(j["evaluations"][0]["v"] == "-10/3");
}

TEST_CASE("upsilon samples agree with breakpoint interpolation") {
  const auto j = run_json({"upsilon", "--torus", "3", "4", "--samples", "12"});
  REQUIRE(j["samples"].size() == 13);
  for (const auto& row : j["samples"]) {
    const Rat t = parse_rational(row["t"].get<std::string>());
    const Rat v = parse_rational(row["v"].get<std::string>());
    // envelope of T(3,4): -3t before 2/3, constant -2 after
    CHECK(v == (t <= Rat(2, 3) ? -3 * t : Rat(-2)));
  }
}

TEST_CASE("signature emits jumps and values") {
  const auto j = run_json({"signature", "--torus", "2", "3", "--at", "1/2"});
  CHECK(j["jumps"] == json({{{"x", "1/6"}, {"delta", -2}}, {{"x", "5/6"}, {"delta", 2}}}));
  CHECK(j["evaluations"][0]["sigma"] == "-2");
  CHECK(run_cli({"signature", "--puiseux", "4;6,7"}).code == 2);  // not a torus knot
}

TEST_CASE("obstruct reports the headline pair") {
  const auto j = run_json({"obstruct", "--k0", "torus", "4", "5",
                           "--k1", "torus", "3", "10"});
  CHECK(j["verdict"] == "Obstructed");
  CHECK(j["upsilon_bound"] == "4");
  CHECK(j["tau_bound"] == "3");
  CHECK(j["witness_t"] == "2/3");
  CHECK(j["signature_bound"] == "3");
  CHECK(j["signature_diff_max"] == "6");
}

TEST_CASE("obstruct orients the pair and accepts Puiseux text") {
  const auto j = run_json({"obstruct", "--k0", "4;30,31", "--k1", "8;10,31"});
  CHECK(j["k0"] == "(8;10,31)");  // reordered so g0 <= g1
  CHECK(j["g0"] == "42");
  CHECK(j["g1"] == "44");
  CHECK(j["verdict"] == "Obstructed");
}

TEST_CASE("search-family finds the example triple and its rows reparse") {
  const auto rows = run_json({"search-family", "--max-a", "4", "--max-c", "31"});
  bool found = false;
  for (const auto& row : rows) {
    const auto k0 = PuiseuxSequence::parse(row["seq0"].get<std::string>());
    const auto k1 = PuiseuxSequence::parse(row["seq1"].get<std::string>());
    CHECK(k0.genus() <= k1.genus());
    CHECK(row["verdict"] == "Obstructed");
    if (row["a"] == "4" && row["b"] == "10" && row["c"] == "31") {
      found = true;
      CHECK(row["seq0"] == "8;10,31");
      CHECK(row["seq1"] == "4;30,31");
      CHECK(row["d"] == "2");
    }
  }
  CHECK(found);
}

TEST_CASE("search-family csv header") {
  const auto r = run_cli({"search-family", "--max-a", "4", "--max-c", "31",
                          "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("a,b,c,d,seq0,seq1,g0,g1,tau_bound,upsilon_bound,verdict\n"));
  CHECK(r.out.find("4,10,31,2,8;10,31,4;30,31,42,44,2,") != std::string::npos);
}
