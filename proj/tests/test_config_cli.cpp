#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssz/cli.hpp"
#include "ssz/config.hpp"
#include "ssz/errors.hpp"

using namespace ssz;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "ssz_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

int run_cli(const std::string& args) {
#ifdef SSZ_CLI_PATH
  const std::string cmd = std::string(SSZ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
#else
  (void)args;
  return -1;
#endif
}

}  // namespace

TEST_CASE("config round trip") {
  const std::string text = R"({
    "family": {"builtin": "example41"},
    "scaling": {"rule": "sqrt"},
    "n": [10, 1000, 1e19],
    "function": {"builtin": "paper_f"},
    "interval": [0, 1],
    "grid_points": 101,
    "out": "table.csv",
    "modulus": {"variant": "exact_increment", "table_grid_points": 20001},
    "a": 1.0
  })";
  const RunConfig cfg = parse_config_text(text);
  CHECK(cfg.family.builtin == "example41");
  CHECK(cfg.n_list.size() == 3);
  CHECK(cfg.n_list[2] == 1e19);
  CHECK(cfg.modulus.variant == "exact_increment");

  const std::string round1 = serialize_config(cfg);
  const std::string round2 = serialize_config(parse_config_text(round1));
  CHECK(round1 == round2);

  const RunConfig cfg2 = parse_config_text(round1);
  CHECK(cfg2.family.builtin == cfg.family.builtin);
  CHECK(cfg2.n_list == cfg.n_list);
  CHECK(cfg2.out == cfg.out);
  CHECK(cfg2.tail_epsilon == cfg.tail_epsilon);
}

TEST_CASE("config diagnostics") {
  CHECK_THROWS_AS(parse_config_text("{ not json"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"frobnicate": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"n": []})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"n": [0.5]})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"interval": [1, 0]})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"operator": "Q"})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"modulus": {"variant": "median"}})"), ConfigError);
  try {
    parse_config_text(R"({"family": {"builtin": "szasz", "weird": 3}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("weird") != std::string::npos);
  }
}

TEST_CASE("scaling rule text forms") {
  CHECK(ScalingSpec::parse_rule("sqrt").rule == "sqrt");
  const auto p = ScalingSpec::parse_rule("power:0.66");
  CHECK(p.rule == "power");
  CHECK(p.exponent == doctest::Approx(0.66));
  const auto t = ScalingSpec::parse_rule("table:1,2,3");
  CHECK(t.b_values.size() == 3);
  CHECK_THROWS_AS(ScalingSpec::parse_rule("cubic"), ConfigError);
  CHECK_THROWS_AS(ScalingSpec::parse_rule("power:abc"), ConfigError);
}

TEST_CASE("summary path derivation") {
  CHECK(cli::summary_path("out.csv") == "out_summary.csv");
  CHECK(cli::summary_path("dir/data.csv") == "dir/data_summary.csv");
  CHECK(cli::summary_path("noext") == "noext_summary");
}

TEST_CASE("cmd_validate") {
  std::ostringstream log;
  RunConfig cfg;
  cfg.family.builtin = "szasz";
  cfg.n_list = {10, 100, 1000};
  CHECK(cli::run_command("validate", cfg, log, log) == cli::kExitOk);

  RunConfig bad = cfg;
  bad.family.builtin.clear();
  bad.family.A = {1.0};
  bad.family.H = {0.0, 2.0};  // H'(1) = 2
  std::ostringstream err;
  CHECK(cli::run_command("validate", bad, log, err) == cli::kExitValidationFailure);
  CHECK(err.str().find("H'(1)=2") != std::string::npos);

  RunConfig bn = cfg;
  bn.scaling.rule = "power";
  bn.scaling.exponent = 1.0;  // b_n = n: ratio does not decay
  CHECK(cli::run_command("validate", bn, log, log) == cli::kExitValidationFailure);
}

TEST_CASE("cmd_converge output shape and determinism") {
  RunConfig cfg;
  cfg.family.builtin = "szasz";
  cfg.function.builtin = "e0";
  cfg.n_list = {10, 50};
  cfg.grid_points = 5;
  cfg.op = "both";
  cfg.out = (temp_dir() / "conv.csv").string();
  std::ostringstream log;
  REQUIRE(cli::run_command("converge", cfg, log, log) == cli::kExitOk);

  const std::string body = slurp(cfg.out);
  std::istringstream lines(body);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "x,f,T_10,T_50,Tstar_10,Tstar_50");
  // e0 passes through the partition of unity: every operator column is 1
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",1,1,1,1") != std::string::npos);
  }
  CHECK(rows == 5);
  CHECK(body.back() == '\n');

  const std::string summary = slurp(cli::summary_path(cfg.out));
  CHECK(summary.find("column,sup_error") == 0);

  REQUIRE(cli::run_command("converge", cfg, log, log) == cli::kExitOk);
  CHECK(slurp(cfg.out) == body);

  SUBCASE("degenerate single-cell run") {
    RunConfig tiny = cfg;
    tiny.n_list = {10};
    tiny.grid_points = 1;
    tiny.op = "T_star";
    tiny.out = (temp_dir() / "tiny.csv").string();
    REQUIRE(cli::run_command("converge", tiny, log, log) == cli::kExitOk);
    const std::string t = slurp(tiny.out);
    CHECK(t == "x,f,Tstar_10\n0,1,1\n");
  }
}

TEST_CASE("cmd_table determinism and values") {
  RunConfig cfg;
  cfg.family.builtin = "example41";
  cfg.n_list = {10, 1e3};
  cfg.out = (temp_dir() / "table.csv").string();
  std::ostringstream log;
  REQUIRE(cli::run_command("table", cfg, log, log) == cli::kExitOk);
  const std::string first = slurp(cfg.out);
  REQUIRE(cli::run_command("table", cfg, log, log) == cli::kExitOk);
  CHECK(slurp(cfg.out) == first);
  CHECK(first.find("n,bound\n10,0.94817") != std::string::npos);
}

TEST_CASE("cmd_moments emits closed and numeric columns") {
  RunConfig cfg;
  cfg.family.builtin = "example41";
  cfg.n_list = {100, 1e19};  // second row infeasible for summation
  cfg.x_values = {0.5};
  cfg.out = (temp_dir() / "moments.csv").string();
  std::ostringstream log;
  REQUIRE(cli::run_command("moments", cfg, log, log) == cli::kExitOk);
  const std::string body = slurp(cfg.out);
  CHECK(body.find("n,b_n,x,m0,m1,m2,c2_displayed,c2_algebraic,m0_num,m1_num,m2_num,c2_num") == 0);
  std::istringstream lines(body);
  std::string header, row_feasible, row_infeasible;
  std::getline(lines, header);
  std::getline(lines, row_feasible);
  std::getline(lines, row_infeasible);
  CHECK(row_feasible.find(",,,,") == std::string::npos);
  CHECK(row_infeasible.find(",,,,") != std::string::npos);
}

TEST_CASE("cmd_bounds report") {
  RunConfig cfg;
  cfg.family.builtin = "szasz";
  cfg.function.builtin = "paper_f";
  cfg.n_list = {100};
  cfg.x_values = {0.25, 0.5};
  cfg.modulus.variant = "two_point";
  cfg.grid_points = 51;
  cfg.out = (temp_dir() / "bounds.json").string();
  std::ostringstream log;
  REQUIRE(cli::run_command("bounds", cfg, log, log) == cli::kExitOk);

  const auto j = nlohmann::json::parse(slurp(cfg.out));
  CHECK(j["family"] == "szasz");
  for (const auto& entry : j["results"]) {
    const double measured = entry["measured_error"].get<double>();
    for (const auto& item : entry["bounds"].items()) {
      CHECK(item.value()["bound"].get<double>() >= measured);
    }
  }
  CHECK(j["sup_errors"][0]["dominated"].get<bool>());
  // weighted section present because T3_7 is requested by default
  CHECK(j.contains("weighted"));
  CHECK(j["weighted"][0]["T3_7"]["dominated"].get<bool>());
}

TEST_CASE("cmd_bounds with rho2 has zero weighted left side") {
  RunConfig cfg;
  cfg.family.builtin = "szasz";
  cfg.function.builtin = "rho2";
  cfg.n_list = {100};
  cfg.x_values = {0.5};
  cfg.theorems = {"T3_7"};
  cfg.out = (temp_dir() / "bounds_rho2.json").string();
  std::ostringstream log;
  REQUIRE(cli::run_command("bounds", cfg, log, log) == cli::kExitOk);
  const auto j = nlohmann::json::parse(slurp(cfg.out));
  CHECK(j["weighted"][0]["T3_7"]["lhs"].get<double>() <= 1e-9);
}

#ifdef SSZ_CLI_PATH
TEST_CASE("process exit codes") {
  CHECK(run_cli("validate --family szasz --n 10,100") == cli::kExitOk);
  CHECK(run_cli("validate --family szasz --n 10,100 --bn power:1") ==
        cli::kExitValidationFailure);

  const fs::path bad_json = temp_dir() / "bad.json";
  spit(bad_json, "{ definitely not json");
  CHECK(run_cli("validate --config " + bad_json.string()) == cli::kExitParseError);

  const fs::path unknown_key = temp_dir() / "unknown.json";
  spit(unknown_key, R"({"no_such_key": 1})");
  CHECK(run_cli("table --config " + unknown_key.string()) == cli::kExitParseError);

  // starved truncation budget -> numeric failure
  const fs::path starved = temp_dir() / "starved.json";
  spit(starved, R"({
    "family": {"builtin": "szasz"},
    "n": [1000],
    "function": {"builtin": "paper_f"},
    "max_terms": 50,
    "grid_points": 3,
    "out": ")" + (temp_dir() / "starved.csv").string() + R"("
  })");
  CHECK(run_cli("converge --config " + starved.string()) == cli::kExitNumericFailure);

  CHECK(run_cli("frobnicate") == cli::kExitParseError);
}
#endif
