#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lincomb/cli.hpp"

using lincomb::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"bounds", "--table"}).code == 0);
  CHECK(call({"factor", "--P", "[]"}).code == 2);
  CHECK(call({"factor", "--P", "[\"x\"]"}).code == 2);
  CHECK(call({"szegedy", "--P", "[\"0\",\"1\"]"}).code == 2);
  CHECK(call({"exponent", "--xi", "1/2+-1/10", "--n", "1", "--X", "3"}).code == 3);
  CHECK(call({"census", "--kind", "M", "--P", "[\"0\",\"0\",\"1\"]", "--Q", "[\"-1\"]", "--H", "1e12", "--delta", "1"}).code == 2);
  CHECK(call({"bogus"}).code == 64);
  CHECK(call({"factor", "--nope"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"census", "--kind", "X"}).code == 64);
}

TEST_CASE("szegedy output") {
  const Result r = call({"szegedy", "--P", "[\"0\",\"0\",\"0\",\"1\"]"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"]["b"] == "2");
  CHECK(j["config"]["subcommand"] == "szegedy");
}

TEST_CASE("bounds table and formulas") {
  const Result r = call({"bounds", "--table"});
  const json j = json::parse(r.out);
  REQUIRE(j["result"]["table"].size() == 5);
  CHECK(j["result"]["table"][0]["bound"].get<double>() == doctest::Approx(2.5));
  const json w = json::parse(call({"bounds", "--formula", "wirsing", "--args", "4"}).out);
  CHECK(w["result"]["value"].get<double>() == doctest::Approx(3.12132).epsilon(1e-5));
  CHECK(call({"bounds", "--formula", "wirsing", "--args", "9"}).code == 2);
  CHECK(call({"bounds", "--formula", "nope"}).code == 2);
}

TEST_CASE("census CSV embeds the configuration and is deterministic") {
  const std::vector<std::string> args{"census", "--kind", "S", "--counterexample", "S_quadratic", "--H", "100000",
                                      "--delta", "0.5", "--seed", "7"};
  const Result a = call(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Result b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# schema_version=1\n# config=", 0) == 0);
  const std::string line2 = a.out.substr(a.out.find('\n') + 1, a.out.find('\n', a.out.find('\n') + 1) - a.out.find('\n') - 1);
  const json cfg = json::parse(line2.substr(std::string("# config=").size()));
  CHECK(cfg["seed"] == 7);
  CHECK(cfg["format"] == "csv");
  CHECK(cfg["flags"]["counterexample"] == "S_quadratic");
  CHECK(a.out.find("l,degree,reducible,factor_degrees\n") != std::string::npos);

  // the thread count is part of the config, the rows are not affected by it
  const Result c = call(threaded);
  CHECK(c.out.substr(c.out.find("l,degree")) == a.out.substr(a.out.find("l,degree")));
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "lincomb_cli_test.json";
  std::filesystem::remove(path);
  const Result r = call({"roots", "--P", "[\"-2\",\"0\",\"1\"]", "-o", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["config"]["output"] == path.string());
  CHECK(j["result"]["roots"].size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("gap verdicts") {
  const json j = json::parse(call({"gap", "--P", "[\"0\",\"-1\",\"1\"]", "--Q", "[\"-1\",\"3\"]", "--n", "2"}).out);
  CHECK(j["result"]["gap"]["lo"] == "0.33333333333333333333");
  CHECK(j["result"]["kappa_condition"].is_null());
  CHECK(j["result"]["theta_condition"] == "no");
}

TEST_CASE("precision from the environment") {
  ::setenv("LINCOMB_PRECISION", "256", 1);
  CHECK(lincomb::cli::default_precision() == 256);
  CHECK(json::parse(call({"factor", "--P", "[\"1\",\"1\"]"}).out)["config"]["precision"] == 256);
  CHECK(json::parse(call({"factor", "--P", "[\"1\",\"1\"]", "--precision", "64"}).out)["config"]["precision"] == 64);
  ::setenv("LINCOMB_PRECISION", "junk", 1);
  CHECK(lincomb::cli::default_precision() == 128);
  ::setenv("LINCOMB_PRECISION", "8", 1);
  CHECK(lincomb::cli::default_precision() == 128);
  ::unsetenv("LINCOMB_PRECISION");
  CHECK(lincomb::cli::default_precision() == 128);
}
