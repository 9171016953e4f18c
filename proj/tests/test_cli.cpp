#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// Drives the installed CLI binary end to end; the path comes from CMake.
#ifndef HFLINK_CLI_PATH
#error "HFLINK_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HFLINK_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "hflink_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

// returns the shell-quoted path (catalog names contain parentheses)
std::string exported(const std::string& name) {
  auto path = (temp_dir() / (name + ".json")).string();
  RunResult r = run("catalog export '" + name + "' '" + path + "'");
  REQUIRE(r.exit_code == 0);
  return "'" + path + "'";
}

}  // namespace

TEST_CASE("catalog list names the shipped entries") {
  RunResult r = run("catalog list");
  CHECK(r.exit_code == 0);
  for (const char* name : {"L7n1", "b(20,-3)", "split-trefoils", "split-unknots", "b(-2,3,8)"})
    CHECK(r.output.find(name) != std::string::npos);

  RunResult shown = run("catalog show L7n1");
  CHECK(shown.exit_code == 0);
  CHECK(shown.output.find("\"linking_number\": 2") != std::string::npos);
  CHECK(run("catalog show no-such-name").exit_code == 1);
}

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + exported("L7n1")).exit_code == 0);

  RunResult warned = run("validate " + exported("b(-2,3,8)"));
  CHECK(warned.exit_code == 0);
  CHECK(warned.output.find("Asymmetric") != std::string::npos);

  auto bad_path = (temp_dir() / "malformed.json").string();
  std::ofstream(bad_path) << "{ this is not json";
  CHECK(run("validate " + bad_path).exit_code == 1);

  auto invalid_path = (temp_dir() / "invalid.json").string();
  std::ofstream(invalid_path) << R"({
    "name": "bad-split",
    "linking_number": 2,
    "alexander_link": [],
    "alexander_component_1": [{"e": 0, "c": 1}],
    "alexander_component_2": [{"e": 0, "c": 1}]
  })";
  CHECK(run("validate " + invalid_path).exit_code == 2);

  CHECK(run("validate /does/not/exist.json").exit_code == 1);
}

TEST_CASE("h-table matches printed anchor values") {
  RunResult r = run("h-table " + exported("b(20,-3)") + " --window 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s2\\s1") != std::string::npos);

  RunResult twice = run("h-table " + exported("b(20,-3)") + " --window 4");
  CHECK(twice.output == r.output);

  RunResult structured = run("h-table " + exported("L7n1") + " --window 2 --format structured");
  CHECK(structured.exit_code == 0);
  CHECK(structured.output.find("\"h\": 1") != std::string::npos);

  RunResult grid = run("h-table " + exported("b(-2,3,8)-hgrid") + " --window 2");
  CHECK(grid.exit_code == 0);
  CHECK(grid.output.find("1/2") != std::string::npos);
}

TEST_CASE("hfl point and table") {
  RunResult point = run("hfl " + exported("L7n1") + " --point 0 0");
  CHECK(point.exit_code == 0);
  CHECK(point.output == "F[-2] + F[-3]\n");

  RunResult parity = run("hfl " + exported("b(-2,3,8)-hgrid") + " --point 0 0");
  CHECK(parity.exit_code == 2);

  RunResult halfint = run("hfl " + exported("b(-2,3,8)-hgrid") + " --point 1/2 1/2");
  CHECK(halfint.exit_code == 0);
  CHECK(halfint.output == "F^2[-4]\n");

  RunResult table = run("hfl " + exported("b(20,-3)") + " --table --window 3");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("4") != std::string::npos);

  RunResult euler = run("hfl " + exported("b(20,-3)") + " --table --euler --window 3");
  CHECK(euler.exit_code == 0);
  CHECK(euler.output.find("-3") != std::string::npos);

  RunResult both = run("hfl " + exported("L7n1") + " --point 0 0 --table");
  CHECK(both.exit_code == 1);
}

TEST_CASE("polytope subcommand") {
  RunResult dual = run("polytope " + exported("L7n1") + " --dual-thurston");
  CHECK(dual.exit_code == 0);
  CHECK(dual.output == "(-1/2, -3/2)\n(1/2, 3/2)\n");

  RunResult floer = run("polytope " + exported("split-trefoils") + " --floer");
  CHECK(floer.exit_code == 0);
  CHECK(floer.output.find("(-1, -1)") != std::string::npos);
  CHECK(floer.output.find("(1, 1)") != std::string::npos);

  RunResult cmp = run("polytope " + exported("L7n1") + " --newton-compare");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.output.rfind("equal", 0) == 0);

  RunResult tikz = run("polytope " + exported("L7n1") + " --dual-thurston --format tikz");
  CHECK(tikz.exit_code == 0);
  CHECK(tikz.output.find("\\draw") != std::string::npos);

  RunResult trivial = run("polytope " + exported("split-unknots") + " --dual-thurston");
  CHECK(trivial.exit_code == 2);
}

TEST_CASE("oracle-check subcommand") {
  RunResult ok = run("oracle-check " + exported("L7n1"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("0 mismatches") != std::string::npos);

  RunResult pattern = run("oracle-check " + exported("pattern-2b"));
  CHECK(pattern.exit_code == 0);
  CHECK(pattern.output.find("expected-d2") != std::string::npos);

  RunResult grid = run("oracle-check " + exported("b(-2,3,8)-hgrid") + " --truncation 40");
  CHECK(grid.exit_code == 0);
}

TEST_CASE("export then validate round trips") {
  for (const char* name : {"L7n1", "b(20,-3)", "split-trefoils", "split-unknots"}) {
    RunResult r = run("validate " + exported(name));
    CHECK(r.exit_code == 0);
  }
}
