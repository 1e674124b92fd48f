#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the binary with the given argument string, capturing stdout and the
// exit code; stderr is discarded.
RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string("'") + SU3FRANEL_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    out.append(buffer, got);
  const int status = pclose(pipe);
  RunResult result;
  result.output = out;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

std::string golden_path(const std::string& name) {
  return std::string(SU3FRANEL_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("exit-code matrix: 0 success, 1 verification failure, 2 usage error") {
  CHECK(run_cli("franel --max 3").exit_code == 0);
  CHECK(run_cli("franel --max -1").exit_code == 2);
  CHECK(run_cli("franel").exit_code == 2);  // missing required option

  CHECK(run_cli("mult --n 2 --basis monomial").exit_code == 0);
  CHECK(run_cli("mult --n 2 --basis character").exit_code == 0);
  CHECK(run_cli("mult --n 2 --basis bogus").exit_code == 2);
  CHECK(run_cli("mult --n -3 --basis monomial").exit_code == 2);

  CHECK(run_cli("gegenbauer --kappa 1 --m1 1 --m2 1").exit_code == 0);
  CHECK(run_cli("gegenbauer --kappa 1/2 --m1 2 --m2 2").exit_code == 0);
  // Eigenvalue collision between (1,1) and (0,0) at coupling -1/2.
  CHECK(run_cli("gegenbauer --kappa -1/2 --m1 1 --m2 1").exit_code == 1);
  CHECK(run_cli("gegenbauer --kappa 1/0 --m1 1 --m2 1").exit_code == 2);
  CHECK(run_cli("gegenbauer --kappa nonsense --m1 1 --m2 1").exit_code == 2);
  CHECK(run_cli("gegenbauer --kappa 1 --m1 -1 --m2 0").exit_code == 2);

  CHECK(run_cli("verify --suite recurrence --n-max 10").exit_code == 0);
  CHECK(run_cli("verify --suite bogus --n-max 3").exit_code == 2);
  CHECK(run_cli("verify --suite hamiltonian --n-max -1").exit_code == 2);

  CHECK(run_cli("express --weight 1,0 --shifts 0..1 --degree 1").exit_code == 0);
  CHECK(run_cli("express --weight 1,0x --shifts 0..1").exit_code == 2);
  CHECK(run_cli("express --weight 0,0 --shifts 2..1").exit_code == 2);
  CHECK(run_cli("express --weight 0,0 --shifts 0..0 --prefactor 'bogus'")
            .exit_code == 2);

  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("documented CSV rows") {
  const RunResult franel = run_cli("franel --max 3 --format csv");
  CHECK(franel.exit_code == 0);
  CHECK(franel.output == "0,1\n1,2\n2,10\n3,56\n");

  const RunResult monomial = run_cli("mult --n 2 --basis monomial --format csv");
  CHECK(monomial.exit_code == 0);
  CHECK(monomial.output == "0,0,10\n1,1,6\n3,0,2\n0,3,2\n2,2,1\n");

  const RunResult character =
      run_cli("mult --n 2 --basis character --format csv");
  CHECK(character.exit_code == 0);
  CHECK(character.output == "0,0,1\n1,1,2\n3,0,1\n0,3,1\n2,2,1\n");

  const RunResult trivial = run_cli("mult --n 0 --basis monomial --format csv");
  CHECK(trivial.output == "0,0,1\n");

  const RunResult half = run_cli("gegenbauer --kappa 1/2 --m1 1 --m2 1 --format csv");
  CHECK(half.exit_code == 0);
  CHECK(half.output == "1,1,1\n0,0,-3/2\n");
}

TEST_CASE("fitting solver through the CLI") {
  const RunResult cubic = run_cli(
      "express --weight 3,0 --prefactor '6*(n+1)' --shifts 0..2 --degree 1 "
      "--format csv");
  CHECK(cubic.exit_code == 0);
  CHECK(cubic.output == "0,-2,-2\n1,-9,-7\n2,2,1\n");

  // The same preset is accepted without the '*' separators.
  const RunResult compact = run_cli(
      "express --weight 3,0 --prefactor '6(n+1)' --shifts 0..2 --degree 1 "
      "--format csv");
  CHECK(compact.output == cubic.output);

  const RunResult zero = run_cli(
      "express --weight 1,0 --shifts 0..1 --degree 1 --format csv");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output == "0,0\n1,0\n");

  const RunResult none = run_cli(
      "express --weight 0,0 --shifts 1..1 --degree 0 --format csv");
  CHECK(none.exit_code == 0);
  CHECK(none.output == "no solution\n");

  const RunResult trivially_franel = run_cli(
      "express --weight 0,0 --prefactor 1 --shifts 0..0 --degree 0 "
      "--format csv");
  CHECK(trivially_franel.output == "0,1\n");
}

TEST_CASE("verification suites pass at desk scale through the CLI") {
  const RunResult small = run_cli("verify --suite all --n-max 4 --format csv");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("fail") == std::string::npos);
  CHECK(small.output.find("hamiltonian,0,pass") != std::string::npos);
  CHECK(small.output.find("recurrence-bridge,4,pass") != std::string::npos);

  const RunResult failing_format =
      run_cli("verify --suite recurrence --n-max 6");
  nlohmann::json record = nlohmann::json::parse(failing_format.output);
  CHECK(record["status"] == "ok");
  CHECK(record["command"] == "verify");
  CHECK(record["payload"]["checks"].is_array());
}

TEST_CASE("byte-identical reruns") {
  const std::string commands[] = {
      "franel --max 12",
      "mult --n 3 --basis character",
      "gegenbauer --kappa 2 --m1 2 --m2 1",
      "verify --suite coefficients --n-max 5",
      "express --weight 2,2 --prefactor '6(n+1)' --shifts 0..2 --degree 1",
  };
  for (const std::string& cmd : commands) {
    const RunResult first = run_cli(cmd);
    const RunResult second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("JSON records parse, carry the four fields, and round-trip") {
  const RunResult res = run_cli("mult --n 2 --basis monomial");
  REQUIRE(res.exit_code == 0);
  const nlohmann::json record = nlohmann::json::parse(res.output);
  CHECK(record.size() == 4);
  CHECK(record["command"] == "mult");
  CHECK(record["parameters"]["n"] == "2");
  CHECK(record["parameters"]["basis"] == "monomial");
  CHECK(record["status"] == "ok");
  REQUIRE(record["payload"]["entries"].is_array());
  CHECK(record["payload"]["entries"][0]["multiplicity"] == "10");
  // Emission is canonical: re-serializing the parse reproduces the bytes.
  CHECK(record.dump(2) + "\n" == res.output);
  CHECK(nlohmann::json::parse(record.dump(2)) == record);
}

TEST_CASE("the --output flag writes the same bytes to a file") {
  const std::string path = "/tmp/su3franel_cli_test_output.json";
  std::remove(path.c_str());
  const RunResult direct = run_cli("franel --max 5");
  const RunResult filed = run_cli("franel --max 5 --output '" + path + "'");
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(read_file(path) == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("golden outputs are reproduced byte for byte") {
  const struct {
    const char* args;
    const char* file;
  } cases[] = {
      {"mult --n 2 --basis monomial", "mult_n2_monomial.json"},
      {"mult --n 2 --basis character", "mult_n2_character.json"},
      {"gegenbauer --kappa 1 --m1 1 --m2 1", "gegenbauer_k1_11.json"},
      {"gegenbauer --kappa 0 --m1 1 --m2 1", "gegenbauer_k0_11.json"},
  };
  for (const auto& c : cases) {
    const RunResult res = run_cli(c.args);
    CHECK(res.exit_code == 0);
    CHECK(res.output == read_file(golden_path(c.file)));
  }
}

TEST_CASE("golden eigenpolynomials carry the documented constant terms") {
  const std::string k1 = read_file(golden_path("gegenbauer_k1_11.json"));
  const nlohmann::json j1 = nlohmann::json::parse(k1);
  REQUIRE(j1["payload"]["terms"].size() == 2);
  CHECK(j1["payload"]["terms"][0]["z1"] == 1);
  CHECK(j1["payload"]["terms"][0]["z2"] == 1);
  CHECK(j1["payload"]["terms"][0]["coefficient"] == "1");
  CHECK(j1["payload"]["terms"][1]["coefficient"] == "-1");

  const std::string k0 = read_file(golden_path("gegenbauer_k0_11.json"));
  const nlohmann::json j0 = nlohmann::json::parse(k0);
  REQUIRE(j0["payload"]["terms"].size() == 2);
  CHECK(j0["payload"]["terms"][1]["z1"] == 0);
  CHECK(j0["payload"]["terms"][1]["z2"] == 0);
  CHECK(j0["payload"]["terms"][1]["coefficient"] == "-3");
}
