#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "kfib/errors.hpp"
#include "kfib/table.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("KFIB_CLI_PATH");
  REQUIRE_MESSAGE(path != nullptr, "KFIB_CLI_PATH must point at the CLI binary");
  return path;
}

CommandResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    std::vector<std::string> cells;
    std::istringstream line_stream(line);
    std::string cell;
    while (std::getline(line_stream, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("tables reject ragged rows") {
  kfib::OutputTable table;
  table.headers = {"a", "b"};
  table.add_row({"1", "2"});
  CHECK_THROWS_AS(table.add_row({"1"}), kfib::usage_error);
}

TEST_CASE("fib subcommand") {
  const auto result = run_cli("fib --kappa 1 --n 6");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "n,F\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n6,8\n");

  const auto pell = run_cli("fib --kappa 2 --n 3");
  CHECK(pell.exit_code == 0);
  CHECK(pell.output == "n,F\n0,0\n1,1\n2,2\n3,5\n");

  const auto single = run_cli("fib --kappa 3 --n 0");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "n,F\n0,0\n");

  const auto checked = run_cli("fib --kappa 1/2 --n 12 --binet");
  CHECK(checked.exit_code == 0);
  for (const auto& row : parse_csv(checked.output)) {
    if (row[0] == "n") continue;
    CHECK(row[3] == "1");
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("fib --kappa banana --n 3").exit_code == 2);
  CHECK(run_cli("fib --kappa 0 --n 3").exit_code == 2);
  CHECK(run_cli("bound --family XYZ").exit_code == 2);
  CHECK(run_cli("--not-a-flag").exit_code == 2);
  CHECK(run_cli("fekete --mu-steps 0").exit_code == 2);
}

TEST_CASE("ptilde subcommand") {
  const auto result = run_cli("ptilde --kappa 2 --order 2");
  CHECK(result.exit_code == 0);
  const auto rows = parse_csv(result.output);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][1] == "1");
  CHECK(rows[2][1] == "2 - sqrt(8)");    // 2 tau for kappa = 2
  CHECK(rows[3][1] == "18 - 6*sqrt(8)");  // 6 tau^2

  const auto constant = run_cli("ptilde --kappa 1 --order 0");
  CHECK(parse_csv(constant.output)[1][1] == "1");
}

TEST_CASE("bound subcommand emits JSON") {
  const auto result = run_cli("bound --family SL --kappa 1");
  CHECK(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.output);
  CHECK(parsed["valid"] == true);
  CHECK(std::stod(parsed["a2_bound"].get<std::string>()) ==
        doctest::Approx(0.41330423812239926).epsilon(1e-15));

  const auto invalid = run_cli("bound --family W --kappa 1 --gamma 1 --alpha 0 --lambda 5");
  CHECK(invalid.exit_code == 0);
  CHECK(nlohmann::json::parse(invalid.output)["valid"] == false);

  const auto ksl = run_cli("bound --family KSL --kappa 1");
  CHECK(nlohmann::json::parse(ksl.output)["valid"] == true);
  CHECK(std::stod(nlohmann::json::parse(ksl.output)["a2_bound"].get<std::string>()) ==
        doctest::Approx(0.19370071365837123).epsilon(1e-12));
}

TEST_CASE("fekete subcommand shows the plateau and the switch") {
  // The threshold at this point is sqrt(5)/|tau| ~ 3.618, so the grid must
  // reach past mu = 1 + 3.618 to see the slope branch.
  const auto result =
      run_cli("fekete --family W --kappa 1 --gamma 1 --lambda 0 --alpha 0 "
              "--mu-from 0 --mu-to 6 --mu-steps 13");
  CHECK(result.exit_code == 0);
  const auto rows = parse_csv(result.output);
  REQUIRE(rows.size() == 14);
  bool saw_flat = false;
  bool saw_slope = false;
  bool switched_back = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][2] == "flat") {
      saw_flat = true;
      if (saw_slope) switched_back = true;
    }
    if (rows[i][2] == "slope") saw_slope = true;
    if (rows[i][0] == "1") {
      CHECK(rows[i][2] == "flat");
    }
  }
  CHECK(saw_flat);
  CHECK(saw_slope);
  CHECK_FALSE(switched_back);  // flat plateau around 1, then linear growth
}

TEST_CASE("csv and json outputs carry identical values") {
  const auto csv = run_cli("fib --kappa 5/3 --n 5 --binet --format csv");
  const auto json_out = run_cli("fib --kappa 5/3 --n 5 --binet --format json");
  CHECK(csv.exit_code == 0);
  CHECK(json_out.exit_code == 0);
  const auto rows = parse_csv(csv.output);
  const auto parsed = nlohmann::json::parse(json_out.output);
  REQUIRE(parsed.size() == rows.size() - 1);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    for (std::size_t j = 0; j < rows[0].size(); ++j) {
      CHECK(parsed[i][rows[0][j]].get<std::string>() == rows[i + 1][j]);
    }
  }
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string command = "verify --suite typos";
  const auto first = run_cli(command);
  const auto second = run_cli(command);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const auto fekete_a = run_cli("fekete --family SL --kappa 2 --mu-from 0 --mu-to 2 --mu-steps 5");
  const auto fekete_b = run_cli("fekete --family SL --kappa 2 --mu-from 0 --mu-to 2 --mu-steps 5");
  CHECK(fekete_a.output == fekete_b.output);
}

TEST_CASE("verify subcommand reports JSON lines and exits zero on success") {
  const auto result = run_cli("verify --suite typos");
  CHECK(result.exit_code == 0);
  std::istringstream stream(result.output);
  std::string line;
  std::size_t records = 0;
  bool saw_summary = false;
  while (std::getline(stream, line)) {
    const auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("check_id")) {
      ++records;
      CHECK(parsed["pass"] == true);
    }
    if (parsed.contains("failures")) {
      saw_summary = true;
      CHECK(parsed["failures"] == 0);
    }
  }
  CHECK(records == 3);
  CHECK(saw_summary);
}

TEST_CASE("float cells carry 17 significant digits") {
  const auto result = run_cli("ptilde --kappa 1 --order 1");
  const auto rows = parse_csv(result.output);
  REQUIRE(rows.size() == 3);
  const std::string cell = rows[2][2];  // tau as a float
  CHECK(cell.substr(0, 3) == "-6.");
  const auto exponent_at = cell.find('e');
  REQUIRE(exponent_at != std::string::npos);
  std::size_t digits = 0;
  for (char ch : cell.substr(0, exponent_at)) {
    if (ch >= '0' && ch <= '9') ++digits;
  }
  CHECK(digits == 17);
}

TEST_CASE("verification failures exit with code 1") {
  // A float tolerance far below the working precision cannot be met.
  const std::string config_path = "/tmp/kfib_tight_tolerance.json";
  {
    FILE* f = std::fopen(config_path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(
        R"({"kappas":["2"],"families":["R"],"proof_chain_tuples":1,"mode":"float","tolerance":1e-60})",
        f);
    std::fclose(f);
  }
  const auto result = run_cli("verify --suite proof-chain --config " + config_path);
  CHECK(result.exit_code == 1);
  bool saw_failure = false;
  std::istringstream stream(result.output);
  std::string line;
  while (std::getline(stream, line)) {
    const auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("pass") && parsed["pass"] == false) saw_failure = true;
  }
  CHECK(saw_failure);
}

TEST_CASE("precision environment variable") {
  const std::string base = cli_path() + " bound --family SL --kappa 1 2>/dev/null";
  FILE* good = popen(("KFIB_PRECISION_BITS=256 " + base).c_str(), "r");
  REQUIRE(good != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, good)) {
    output.append(buffer, got);
  }
  CHECK(WEXITSTATUS(pclose(good)) == 0);
  CHECK(nlohmann::json::parse(output)["valid"] == true);

  FILE* bad = popen(("KFIB_PRECISION_BITS=banana " + base).c_str(), "r");
  REQUIRE(bad != nullptr);
  while (std::fread(buffer, 1, sizeof buffer, bad) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(bad)) == 2);
}

TEST_CASE("verify honors a config file") {
  const std::string config_path = "/tmp/kfib_test_config.json";
  {
    FILE* f = std::fopen(config_path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(R"({"kappas":["1"],"families":["P"],"proof_chain_tuples":2,"mode":"exact"})",
               f);
    std::fclose(f);
  }
  const auto result = run_cli("verify --suite proof-chain --config " + config_path);
  CHECK(result.exit_code == 0);
  std::istringstream stream(result.output);
  std::string line;
  std::size_t records = 0;
  while (std::getline(stream, line)) {
    const auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("check_id")) ++records;
  }
  CHECK(records == 2 * 6);  // two tuples, six records each, exact mode only
  CHECK(run_cli("verify --config /nonexistent.json").exit_code == 2);
}
