#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swan/cli.hpp"

using nlohmann::json;

static std::pair<int, json> run(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  int rc = swan::run_cli(args, in, out);
  json j = json::parse(out.str(), nullptr, false);
  if (j.is_discarded()) j = json{{"raw", out.str()}};
  return {rc, j};
}

TEST_CASE("sw and minlift") {
  auto [rc, j] = run({"sw"}, R"({"p":2,"h":1,"r":2,"covector":["u1*t^-1"]})");
  CHECK(rc == 0);
  CHECK(j.at("sw") == 1);

  auto [rc2, j2] = run({"minlift"}, R"({"p":2,"h":1,"r":2,"covector":["0","u1^2*t^-2"]})");
  CHECK(rc2 == 0);
  CHECK(j2.at("sw") == 1);
  REQUIRE(j2.at("minimal").size() == 1);
  CHECK(j2["minimal"][0]["n"] == 1);
  CHECK(j2["minimal"][0]["m"] == 0);
  CHECK(j2["minimal"][0]["witt"][0] == "u1");
}

TEST_CASE("witt-add") {
  auto [rc, j] = run({"witt-add"}, R"({"p":2,"h":1,"r":1,"a":["1","0"],"b":["1","0"]})");
  CHECK(rc == 0);
  CHECK(j.at("result")[0] == "0");
  CHECK(j.at("result")[1] == "1");
}

TEST_CASE("witt-mul") {
  auto [rc, j] = run({"witt-mul"}, R"({"p":2,"h":1,"r":2,"a":["u1*t^-1"],"b":["u2*t^2"]})");
  CHECK(rc == 0);
  CHECK(j.at("result")[0] == "u1*u2*t");
}

TEST_CASE("extension field document") {
  auto [rc, j] = run({"sw"}, R"({"p":2,"h":2,"r":1,"ext_poly":[1,1,1],"covector":["g*u1*t^-1"]})");
  CHECK(rc == 0);
  CHECK(j.at("sw") == 1);
}

TEST_CASE("radius CSV export") {
  std::string path = "/tmp/swan-radius-test.csv";
  auto [rc, j] = run({"radius", "--csv", path},
                     R"({"p":2,"h":1,"r":2,"covector":["u1*t^-1 + u2*t^-3"]})");
  CHECK(rc == 0);
  CHECK(j.at("sw_nabla") == "3");
  std::ifstream csv(path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "r,logT");
  int rows = 0;
  std::string line;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows >= 32);
}

TEST_CASE("newton") {
  auto [rc, j] = run({"newton"}, R"({"valuations":[-3,"inf",0]})");
  CHECK(rc == 0);
  CHECK(j.at("irr") == 1);
  CHECK(j.at("slope") == "1/2");
}

TEST_CASE("compare") {
  auto [rc, j] = run({"compare"}, R"({"p":2,"h":1,"r":1,"covector":["0"]})");
  CHECK(rc == 0);
  CHECK(j.at("sw") == 0);
  CHECK(j.at("sw_nabla") == 0);
  CHECK(j.at("equal") == true);

  auto [rc2, j2] = run({"compare"}, R"({"p":3,"h":1,"r":2,"covector":["u1*t^-1 + u2*t^-4"]})");
  CHECK(rc2 == 0);
  CHECK(j2.at("sw") == 4);
  CHECK(j2.at("equal") == true);
}

TEST_CASE("rsw") {
  auto [rc, j] = run({"rsw"}, R"({"p":3,"h":1,"r":1,"covector":["u1*t^-2"]})");
  CHECK(rc == 0);
  CHECK(j.at("d") == 2);
  CHECK(j.at("alpha")[0] == "1");
  CHECK(j.at("beta") == "u1");  // -2 u1 = u1 mod 3
  // unramified input is an input error
  auto [rc2, j2] = run({"rsw"}, R"({"p":2,"h":1,"r":1,"covector":["u1"]})");
  CHECK(rc2 == 2);
  CHECK(j2.at("error") == "UnramifiedCharacter");
}

TEST_CASE("radius") {
  auto [rc, j] = run({"radius"}, R"({"p":2,"h":1,"r":1,"covector":["u1*t^-1"]})");
  CHECK(rc == 0);
  CHECK(j.at("sw_nabla") == "1");
  REQUIRE(j.at("pieces").size() == 1);
  CHECK(j["pieces"][0]["slope"] == "1");
  CHECK(j["pieces"][0]["icpt"] == "0");
}

TEST_CASE("piexp") {
  auto [rc, j] = run({"piexp", "--order", "3"}, R"({"p":2,"h":1,"r":1,"covector":["t^-1"]})");
  CHECK(rc == 0);
  CHECK(j.at("order") == 3);
  REQUIRE(j.at("series").size() == 1);
  auto& coeffs = j["series"][0]["coeffs"];
  CHECK(coeffs[0] == "1");
  CHECK(coeffs[1] == "-2");  // pi_0 for p = 2
  CHECK(coeffs[2] == "2");
}

TEST_CASE("errors and exit codes") {
  auto [rc, j] = run({"sw"}, R"({"p":2,"covector":["u1*t^-1"],"bogus":1})");
  CHECK(rc == 2);
  CHECK(j.at("error") == "BadInput");
  auto [rc2, j2] = run({"sw"}, "not json");
  CHECK(rc2 == 2);
  auto [rc3, j3] = run({"nope"}, "");
  CHECK(rc3 == 2);
  auto [rc4, j4] = run({"sw"}, R"({"p":2,"h":1,"r":1,"covector":["u1*t^-1","0","0","0","0"]})");
  CHECK(rc4 == 2);
  CHECK(j4.at("error") == "BoundExceeded");
}

TEST_CASE("fuzz determinism") {
  auto [rc1, j1] = run({"fuzz-compare", "--seed", "7", "--count", "12"}, "");
  auto [rc2, j2] = run({"fuzz-compare", "--seed", "7", "--count", "12"}, "");
  CHECK(rc1 == 0);
  CHECK(j1 == j2);
  CHECK(j1.at("mismatches") == 0);
  auto [rc3, j3] = run({"fuzz-compare", "--seed", "7", "--count", "0"}, "");
  CHECK(rc3 == 0);
  CHECK(j3.at("count") == 0);
  CHECK(j3.at("histogram").empty());
}
