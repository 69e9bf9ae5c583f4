#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "groupwave/scenario.hpp"

using namespace groupwave;

namespace {

const char* kBasicConfig = R"({
  "group": "int_z",
  "character": {"kind": "id_on_z"},
  "x0": "1+0i * 1",
  "y0": "",
  "times": {"start": 0.0, "stop": 3.141592653589793, "steps": 9},
  "fd_step": 0.001,
  "tracked_elements": ["1"],
  "output": {"path": "", "format": "csv"},
  "verify": {"pde": true, "initial": true, "identities": true, "classical": true}
})";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempFile {
  explicit TempFile(const std::string& name)
      : path("groupwave_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("config parses and serializes to a fixed point") {
  ScenarioConfig config = parse_scenario(kBasicConfig);
  CHECK(config.group == GroupId::IntZ);
  CHECK(config.character.kind() == RealCharacter::Kind::IdOnZ);
  CHECK(config.x0.support_size() == 1);
  CHECK(config.y0.is_zero());
  CHECK(config.times.steps == 9);
  CHECK(config.tracked.size() == 1);

  std::string canonical = serialize_scenario(config);
  ScenarioConfig reparsed = parse_scenario(canonical);
  CHECK(serialize_scenario(reparsed) == canonical);
  CHECK(reparsed.x0 == config.x0);
}

TEST_CASE("unknown fields are rejected by name") {
  std::string bad = R"({"group": "int_z", "character": {"kind": "id_on_z"},
                        "x0": "1+0i * 1", "frobnicate": 3})";
  try {
    parse_scenario(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
  }

  std::string nested = R"({"group": "int_z", "character": {"kind": "id_on_z"},
                           "x0": "", "times": {"start": 0, "stop": 1,
                           "steps": 2, "stepz": 3}})";
  try {
    parse_scenario(nested);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("times.stepz") != std::string::npos);
  }
}

TEST_CASE("config validation errors name the field") {
  auto expect_config_error = [](const std::string& text,
                                const std::string& needle) {
    try {
      parse_scenario(text);
      FAIL("expected ConfigError for ", needle);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_config_error(R"({"character": {"kind": "id_on_z"}, "x0": ""})",
                      "group");
  expect_config_error(
      R"({"group": "int_z", "character": {"kind": "id_on_z"},
          "x0": "nonsense * 1"})",
      "x0");
  expect_config_error(
      R"({"group": "int_z", "character": {"kind": "id_on_z"}, "x0": "",
          "times": {"start": 0, "stop": 1, "steps": 0}})",
      "steps");
  expect_config_error(
      R"({"group": "int_z", "character": {"kind": "id_on_z"}, "x0": "",
          "fd_step": 0.0})",
      "fd_step");
  expect_config_error(
      R"({"group": "int_z", "character": {"kind": "id_on_z"}, "x0": "",
          "tracked_elements": ["x"]})",
      "tracked_elements[0]");
  expect_config_error("not json", "JSON");
}

TEST_CASE("character kind and group must match") {
  std::string mismatch = R"({"group": "free_group_2",
                             "character": {"kind": "id_on_z"}, "x0": ""})";
  CHECK_THROWS_AS(parse_scenario(mismatch), SemanticError);
}

TEST_CASE("times accept an explicit list") {
  std::string with_list = R"({"group": "int_z",
                              "character": {"kind": "id_on_z"},
                              "x0": "1+0i * 0",
                              "times": {"list": [0.0, 0.25, 1.5]}})";
  ScenarioConfig config = parse_scenario(with_list);
  CHECK(config.times.values() == std::vector<double>{0.0, 0.25, 1.5});

  std::string negative = R"({"group": "int_z",
                             "character": {"kind": "id_on_z"},
                             "x0": "", "times": {"list": [-1.0]}})";
  CHECK_THROWS_AS(parse_scenario(negative), ConfigError);
}

TEST_CASE("linear time grids hit both endpoints") {
  ScenarioConfig config = parse_scenario(kBasicConfig);
  std::vector<double> times = config.times.values();
  REQUIRE(times.size() == 9);
  CHECK(times.front() == 0.0);
  CHECK(times.back() == doctest::Approx(3.141592653589793).epsilon(1e-15));

  config.times.steps = 1;
  config.times.start = 0.0;
  CHECK(config.times.values() == std::vector<double>{0.0});
}

TEST_CASE("simulate writes deterministic csv with tracked columns") {
  TempFile out("simulate.csv");
  ScenarioConfig config = parse_scenario(kBasicConfig);
  config.output.path = out.path;
  CommandOptions options;
  CHECK(cmd_simulate(config, options) == kExitOk);
  std::string first = read_file(out.path);
  CHECK(cmd_simulate(config, options) == kExitOk);
  CHECK(read_file(out.path) == first);

  std::istringstream lines(first);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,residual_l2,energy,re(w_1),im(w_1)");
  std::string row;
  std::string last;
  int rows = 0;
  while (std::getline(lines, row)) {
    if (!row.empty()) {
      last = row;
      ++rows;
    }
  }
  CHECK(rows == 9);
  // Final row is t = pi: re(w_1) = cos(pi) = -1.
  CHECK(last.find(",-1,") != std::string::npos);

  // Multi-threaded output is byte-identical.
  options.threads = 4;
  CHECK(cmd_simulate(config, options) == kExitOk);
  CHECK(read_file(out.path) == first);
}

TEST_CASE("simulate with a single step emits u = x0") {
  TempFile out("single.csv");
  ScenarioConfig config = parse_scenario(kBasicConfig);
  config.output.path = out.path;
  config.times.is_list = false;
  config.times.start = 0.0;
  config.times.steps = 1;
  CHECK(cmd_simulate(config, CommandOptions{}) == kExitOk);
  std::istringstream lines(read_file(out.path));
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(row == "0,0,1,1,0");
}

TEST_CASE("kernel tracking on F2 is affine in t") {
  TempFile out("f2.csv");
  std::string text = R"({
    "group": "free_group_2",
    "character": {"kind": "exponent_sum_x_on_f2"},
    "x0": "",
    "y0": "1+0i * y",
    "times": {"start": 0.0, "stop": 2.0, "steps": 5},
    "tracked_elements": ["y"],
    "verify": {"pde": false}
  })";
  ScenarioConfig config = parse_scenario(text);
  config.output.path = out.path;
  CHECK(cmd_simulate(config, CommandOptions{}) == kExitOk);
  std::istringstream lines(read_file(out.path));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,energy,re(w_y),im(w_y)");
  double expected_t = 0.0;
  std::string row;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    double t = 0.0;
    double e = 0.0;
    double re = 0.0;
    double im = 0.0;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf", &t, &e, &re, &im) == 4);
    CHECK(re == doctest::Approx(t).epsilon(1e-15));  // w_y(t) = t
    CHECK(im == 0.0);
    CHECK(t == doctest::Approx(expected_t).epsilon(1e-15));
    expected_t += 0.5;
  }
}

TEST_CASE("verify reports pass and the corrupted fixture fails") {
  TempFile out("verify.json");
  ScenarioConfig config = parse_scenario(kBasicConfig);
  config.output.path = out.path;
  // Identity families only, to keep the unit suite fast.
  config.verify.pde = false;
  config.verify.initial = false;
  config.verify.classical = false;
  CommandOptions options;
  CHECK(cmd_verify(config, options) == kExitOk);
  std::string report = read_file(out.path);
  CHECK(report.find("\"all_pass\": true") != std::string::npos);
  CHECK(report.find("operator_identities") != std::string::npos);

  options.corrupt_t_b = true;
  CHECK(cmd_verify(config, options) == kExitVerifyFailed);
  std::string corrupted = read_file(out.path);
  CHECK(corrupted.find("\"all_pass\": false") != std::string::npos);
  CHECK(corrupted.find("t_b s_b vanishes") != std::string::npos);
}

TEST_CASE("verify skips classical checks off IntZ") {
  TempFile out("verify_f2.json");
  std::string text = R"({
    "group": "free_group_2",
    "character": {"kind": "exponent_sum_x_on_f2"},
    "x0": "1+0i * x",
    "verify": {"pde": false, "initial": false, "identities": false,
               "classical": true}
  })";
  ScenarioConfig config = parse_scenario(text);
  config.output.path = out.path;
  CHECK(cmd_verify(config, CommandOptions{}) == kExitOk);
  std::string report = read_file(out.path);
  CHECK(report.find("\"status\": \"skipped\"") != std::string::npos);
  CHECK(report.find("group not IntZ") != std::string::npos);
}

TEST_CASE("norms command emits the sandwich") {
  TempFile out("norms.json");
  std::string text = R"({
    "group": "int_z",
    "character": {"kind": "id_on_z"},
    "x0": "1+0i * 1; 1+0i * -1",
    "norm": {"method": "circle_grid", "resolution": 4096}
  })";
  ScenarioConfig config = parse_scenario(text);
  config.output.path = out.path;
  CHECK(cmd_norms(config, CommandOptions{}) == kExitOk);
  std::string report = read_file(out.path);
  CHECK(report.find("\"opnorm_lower\"") != std::string::npos);
  CHECK(report.find("\"method\": \"circle_grid\"") != std::string::npos);

  // CircleGrid on a non-IntZ group is a semantic error (exit 3 at the CLI).
  std::string f2 = R"({
    "group": "free_group_2",
    "character": {"kind": "exponent_sum_x_on_f2"},
    "x0": "1+0i * x",
    "norm": {"method": "circle_grid", "resolution": 64}
  })";
  ScenarioConfig bad = parse_scenario(f2);
  bad.output.path = out.path;
  CHECK_THROWS_AS(cmd_norms(bad, CommandOptions{}), SemanticError);

  // Missing norm block is a config error.
  ScenarioConfig no_norm = parse_scenario(kBasicConfig);
  CHECK_THROWS_AS(cmd_norms(no_norm, CommandOptions{}), ConfigError);
}

TEST_CASE("compare command writes per-time errors") {
  TempFile out("compare.csv");
  ScenarioConfig config = parse_scenario(kBasicConfig);
  config.output.path = out.path;
  CHECK(cmd_compare(config, CommandOptions{}) == kExitOk);
  std::istringstream lines(read_file(out.path));
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,max_abs_error");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    ++rows;
    double t = 0.0;
    double err = 0.0;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf", &t, &err) == 2);
    CHECK(err <= 1e-10);
  }
  CHECK(rows == 9);
}

TEST_CASE("character and symbol JSON round trips") {
  RealCharacter custom = RealCharacter::custom(
      GroupId::FreeGroup2, {{"x", Rational(1, 3)}, {"y", Rational(-2, 1)}});
  RealCharacter back = character_from_json(character_to_json(custom));
  CHECK(back == custom);

  MultiplierSymbol symbol = MultiplierSymbol::exp(RealCharacter::id_on_z(), 1.5);
  std::string json = multiplier_symbol_to_json(symbol);
  CHECK(json.find("\"kind\":\"exp\"") != std::string::npos);
  MultiplierSymbol reparsed = multiplier_symbol_from_json(json);
  CHECK(reparsed.kind() == MultiplierSymbol::Kind::Exp);
  CHECK(reparsed.time() == 1.5);
  CHECK(reparsed.character() == symbol.character());

  MultiplierSymbol laplacian = multiplier_symbol_from_json(
      multiplier_symbol_to_json(MultiplierSymbol::laplacian(custom)));
  CHECK(laplacian.kind() == MultiplierSymbol::Kind::Laplacian);
  CHECK(laplacian.character() == custom);
}
