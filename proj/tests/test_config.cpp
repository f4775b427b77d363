#include "vuf/commands.hpp"
#include "vuf/config.hpp"
#include "vuf/error.hpp"

#include <doctest.h>

using namespace vuf;
using nlohmann::ordered_json;

TEST_CASE("config round-trips through JSON") {
  RunConfig c;
  c.command = "fiber";
  c.mode = "first";
  c.system = "A4";
  c.J = {"-b:1"};
  c.profile = {{"-c", 2}};
  c.word = {"sa*sb", "sd"};
  c.theta = {1, 2};
  c.count_points = {2, 4};
  c.budget = 12345;
  c.table = true;
  const ordered_json j = c;
  CHECK(j.get<RunConfig>() == c);
  CHECK(ordered_json::parse(j.dump()).get<RunConfig>() == c);
  CHECK(ordered_json(RunConfig{}).get<RunConfig>() == RunConfig{});
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(ordered_json::parse(R"({"sytem": "A2"})").get<RunConfig>(), InputError);
  CHECK_THROWS_AS(ordered_json::parse(R"({"p": "two"})").get<RunConfig>(), InputError);
}

TEST_CASE("TOML subset") {
  const auto j = parse_toml_subset(R"(# a chow run
system = "A4"   # inline comment
J = ["-b:1", "[0,-1,-1,0]:1"]
p = 3
strict = true
word = ['sa*sb', "sd"]
)");
  const auto c = j.get<RunConfig>();
  CHECK(c.system == "A4");
  CHECK(c.J == std::vector<std::string>{"-b:1", "[0,-1,-1,0]:1"});
  CHECK(c.p == 3);
  CHECK(c.strict);
  CHECK(c.word == std::vector<std::string>{"sa*sb", "sd"});
  CHECK_THROWS_AS(parse_toml_subset("system A4"), InputError);
}

TEST_CASE("file values override flags") {
  RunConfig flags;
  flags.command = "chow";
  flags.system = "A3";
  flags.p = 5;
  const auto merged = merge_config(flags, ordered_json{{"system", "A4"}});
  CHECK(merged.system == "A4");
  CHECK(merged.p == 5);
  CHECK(merged.command == "chow");
}

TEST_CASE("list splitting keeps bracketed roots") {
  CHECK(split_list("sa*sb, sd") == std::vector<std::string>{"sa*sb", "sd"});
  CHECK(split_list("[0,-1,0,0]:1,-a:2") == std::vector<std::string>{"[0,-1,0,0]:1", "-a:2"});
  CHECK(split_list("").empty());
}

TEST_CASE("datum construction from a config") {
  RunConfig c;
  c.system = "A4";
  c.J = {"-b:1"};
  const auto d = make_datum(c);
  CHECK(d.entries().size() == 1);
  c.strict = true;
  CHECK_THROWS_AS(make_datum(c), InputError);
  c.J.clear();
  c.profile = {{"-b", 1}};
  CHECK(make_datum(c).entries().size() == 4);
  c.profile = {{"b", 1}};
  CHECK(make_datum(c).entries().size() == 4);
  c.J = {"-a:1"};
  CHECK_THROWS_AS(make_datum(c), InputError);  // both profile and J
  c.profile.clear();
  c.J = {"-a"};
  CHECK_THROWS_AS(make_datum(c), InputError);
  c.J = {"-a:x"};
  CHECK_THROWS_AS(make_datum(c), InputError);
}

TEST_CASE("reports are deterministic") {
  RunConfig c;
  c.command = "fiber";
  c.mode = "first";
  c.system = "A4";
  c.J = {"-b:1"};
  c.word = {"sa*sb", "sd"};
  const auto a = run_command(c);
  CHECK(a.dump() == run_command(c).dump());
  const auto& dirs = a["report"]["directions"];
  REQUIRE(dirs.size() == 1);
  CHECK(dirs[0]["root"] == "-b");
  CHECK(dirs[0]["exponent"] == 1);

  c.mode = "cell";
  c.element = "sa";
  c.word.clear();
  CHECK(run_command(c)["report"]["directions"][0]["root"] == "-a-b");
}

TEST_CASE("chow report") {
  RunConfig c;
  c.command = "chow";
  c.system = "A4";
  c.J = {"-b:1"};
  const auto r = run_command(c);
  CHECK(r["classes"] == 120);
  CHECK(r["d_top"] == 1);
  CHECK(r["d_identity"] == 0);
  CHECK(render_table(r).find("d_top: 1") != std::string::npos);
}

TEST_CASE("command errors") {
  RunConfig c;
  c.command = "nonsense";
  CHECK_THROWS_AS(run_command(c), InputError);
  c.command = "fiber";
  c.mode = "sideways";
  CHECK_THROWS_AS(run_command(c), InputError);
  c.command = "count";
  c.polys = {"a+b+c+d+e+f+g+h"};
  c.q = 16;
  c.budget = 100;
  CHECK_THROWS_AS(run_command(c), BudgetExceeded);
}
