// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests that exercise the installed command-line surface by
// running the real binary (path via ENTROVOL_CLI).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "support/exec.hpp"

using testutil::cli_path;
using testutil::read_file;
using testutil::run_command;
using testutil::scratch_file;
using testutil::write_file;

namespace {

std::string gen_csv(const std::string& label, int seed, int rows = 300) {
  const auto path = scratch_file(label + ".csv");
  const auto result = run_command(cli_path() + " gen-synthetic --out " + path.string() +
                                  " --label " + label + " --seed " +
                                  std::to_string(seed) + " --rows " +
                                  std::to_string(rows));
  REQUIRE(result.exit_code == 0);
  return path.string();
}

}  // namespace

TEST_CASE("gen-synthetic writes a loadable, reproducible CSV") {
  const auto a = gen_csv("tw", 11, 250);
  const auto contents = read_file(a);
  CHECK(contents.starts_with("date,close\n"));
  // 1 header + 250 rows
  CHECK(std::count(contents.begin(), contents.end(), '\n') == 251);

  const auto b = gen_csv("tw", 11, 250);
  CHECK(read_file(b) == contents);

  const auto c = gen_csv("tw", 12, 250);
  CHECK(read_file(c) != contents);
}

TEST_CASE("report with defaults prints Shannon and three Tsallis rows") {
  const auto csv = gen_csv("one", 21);
  const auto result = run_command(cli_path() + " report " + csv);
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("Shannon") != std::string::npos);
  CHECK(result.out.find("Tsallis (q=1.4)") != std::string::npos);
  CHECK(result.out.find("Tsallis (q=1.45)") != std::string::npos);
  CHECK(result.out.find("Tsallis (q=1.5)") != std::string::npos);
  CHECK(result.out.find("Jarque-Bera") != std::string::npos);
}

TEST_CASE("a bad input fails with the offending row and no partial output") {
  const auto path = scratch_file("neg.csv");
  write_file(path,
             "date,close\n2020-01-01,100\n2020-01-02,-5\n2020-01-03,101\n"
             "2020-01-04,102\n2020-01-05,103\n");
  const auto result = run_command(cli_path() + " report " + path.string());
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
  CHECK(result.err.find("line 3") != std::string::npos);
}

TEST_CASE("--keep-going emits the healthy series and still fails") {
  const auto bad = scratch_file("bad.csv");
  write_file(bad, "date,close\n2020-01-01,100\n2020-01-02,-5\n");
  const auto good = gen_csv("good", 31);
  const auto result = run_command(cli_path() + " report --keep-going " +
                                  bad.string() + " " + good);
  CHECK(result.exit_code != 0);
  CHECK(result.out.find("good") != std::string::npos);
  CHECK(result.err.find("bad.csv") != std::string::npos);
}

TEST_CASE("--skip-bad-rows loads around damaged rows with a warning") {
  const auto path = scratch_file("gappy.csv");
  write_file(path,
             "date,close\n2020-01-01,100\n2020-01-02,\n2020-01-03,101\n"
             "2020-01-04,99\n2020-01-05,102\n2020-01-06,98\n");
  const auto strict = run_command(cli_path() + " report " + path.string());
  CHECK(strict.exit_code != 0);

  const auto lenient =
      run_command(cli_path() + " report --skip-bad-rows --format json " + path.string());
  REQUIRE(lenient.exit_code == 0);
  CHECK(lenient.err.find("skipped 1") != std::string::npos);
  const auto doc = nlohmann::json::parse(lenient.out);
  CHECK(doc.at(0).at("stats").at("n").get<int>() == 4);
}

TEST_CASE("table, csv and json outputs agree on the numbers") {
  const auto csv_in = gen_csv("fmt", 41);
  const auto base = cli_path() + " report --q 1.4,1.45,1.5 " + csv_in;
  const auto table = run_command(base);
  const auto csv_out = run_command(base + " --format csv");
  const auto json_out = run_command(base + " --format json");
  REQUIRE(table.exit_code == 0);
  REQUIRE(csv_out.exit_code == 0);
  REQUIRE(json_out.exit_code == 0);

  const auto doc = nlohmann::json::parse(json_out.out);
  const double shannon = doc.at(0).at("entropy").at("shannon").get<double>();

  // csv carries the same full-precision value
  CHECK(csv_out.out.find(std::to_string(shannon).substr(0, 6)) != std::string::npos);

  // the table shows it rounded to 4 decimals
  char rounded[32];
  std::snprintf(rounded, sizeof rounded, "%.4f", shannon);
  CHECK(table.out.find(rounded) != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const auto a = gen_csv("det1", 51);
  const auto b = gen_csv("det2", 52);
  const auto cmd = cli_path() + " report --format json " + a + " " + b;
  const auto first = run_command(cmd);
  const auto second = run_command(cmd);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const auto table_cmd = cli_path() + " report " + a + " " + b;
  CHECK(run_command(table_cmd).out == run_command(table_cmd).out);
}

TEST_CASE("custom --q list shows up in the output") {
  const auto csv = gen_csv("qlist", 61);
  const auto result =
      run_command(cli_path() + " report --q 1.2,2 --format json " + csv);
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  const auto& tsallis = doc.at(0).at("entropy").at("tsallis");
  CHECK(tsallis.contains("1.2"));
  CHECK(tsallis.contains("2"));
  CHECK(tsallis.size() == 2);
  // q = 2 sits outside [1, 5/3) and draws an advisory note
  CHECK(result.err.find("finite-variance") != std::string::npos);
}

TEST_CASE("duplicate q values are rejected") {
  const auto csv = gen_csv("qdup", 71);
  const auto result = run_command(cli_path() + " report --q 1.4,1.4 " + csv);
  CHECK(result.exit_code != 0);
  CHECK(result.out.empty());
}

TEST_CASE("--bins and --range shape the histogram") {
  const auto csv = gen_csv("hist", 81);
  const auto result = run_command(cli_path() + " report --bins 5 --range -1:1 " +
                                  "--format json " + csv);
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.out);
  // 5 cells cap the Shannon entropy at ln 5
  CHECK(doc.at(0).at("entropy").at("shannon").get<double>() <= std::log(5.0));

  const auto narrow = run_command(cli_path() + " report --range 0:1e-9 " + csv);
  CHECK(narrow.exit_code != 0);  // observations fall outside the range
}

TEST_CASE("a negative q is rejected before any work happens") {
  const auto csv = gen_csv("qneg", 91);
  const auto result = run_command(cli_path() + " report --q -0.5 " + csv);
  CHECK(result.exit_code != 0);
}
