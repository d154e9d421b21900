#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HSG_CLI_PATH
#define HSG_CLI_PATH "./build/tools/hsg"
#endif
#ifndef HSG_FIXTURES_DIR
#define HSG_FIXTURES_DIR "fixtures"
#endif
#ifndef HSG_GOLDEN_DIR
#define HSG_GOLDEN_DIR "tests/golden"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout only
};

RunResult run_cli(const std::string &args) {
  const std::string cmd = std::string(HSG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    r.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fixture(const std::string &name) {
  return std::string(HSG_FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cli: check passes the fixture pack and is deterministic") {
  const std::string args = "check all " + fixture("grid_small.json") + " " +
                           fixture("adjunction_emptiness.json") + " " +
                           fixture("criterion_iso.json");
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli: exit codes") {
  SUBCASE("missing file exits 4") {
    CHECK(run_cli("check all /does/not/exist.json").exit_code == 4);
  }
  SUBCASE("validation failure exits 2") {
    std::ofstream("/tmp/hsg_cli_broken.json")
        << R"json({"kind": "grid", "format_version": 1, "body": {"axes": [], "tokens": [{"id": "t", "coords": {"ghost": 1}}]}})json";
    CHECK(run_cli("check grid /tmp/hsg_cli_broken.json").exit_code == 2);
  }
  SUBCASE("registry conflict exits 3") {
    run_cli("registry init --registry /tmp/hsg_cli_reg.json");
    RunResult first = run_cli("registry attach " + fixture("package_hsg0.json") +
                              " --registry /tmp/hsg_cli_reg.json");
    CHECK(first.exit_code == 0);
    RunResult again = run_cli("registry attach " + fixture("package_hsg0.json") +
                              " --registry /tmp/hsg_cli_reg.json");
    CHECK(again.exit_code == 3);
  }
}

TEST_CASE("cli: registry round trip") {
  run_cli("registry init --registry /tmp/hsg_cli_reg2.json");
  SUBCASE("init matches the golden serialization") {
    CHECK(read_file("/tmp/hsg_cli_reg2.json") ==
          read_file(std::string(HSG_GOLDEN_DIR) + "/registry_init.json"));
  }
  SUBCASE("list and order") {
    CHECK(run_cli("registry list --registry /tmp/hsg_cli_reg2.json").output ==
          "ces 1\n");
    CHECK(run_cli("registry order --registry /tmp/hsg_cli_reg2.json").output ==
          "ces\n");
  }
  SUBCASE("attach then detach restores the document") {
    const std::string before = read_file("/tmp/hsg_cli_reg2.json");
    run_cli("registry attach " + fixture("package_hsg0.json") +
            " --registry /tmp/hsg_cli_reg2.json");
    run_cli("registry detach hsg0 --registry /tmp/hsg_cli_reg2.json");
    CHECK(read_file("/tmp/hsg_cli_reg2.json") == before);
  }
  SUBCASE("attestations are deterministic and digest-sensitive") {
    RunResult a = run_cli(
        "registry attest node-1 --counter 7 --registry /tmp/hsg_cli_reg2.json");
    RunResult b = run_cli(
        "registry attest node-1 --counter 7 --registry /tmp/hsg_cli_reg2.json");
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"verified\": true") != std::string::npos);
    run_cli("registry attach " + fixture("package_hsg0.json") +
            " --registry /tmp/hsg_cli_reg2.json");
    RunResult c = run_cli(
        "registry attest node-1 --counter 7 --registry /tmp/hsg_cli_reg2.json");
    CHECK(c.output != a.output);
  }
}

TEST_CASE("cli: sim run reproduces the golden trace") {
  const std::string args = "sim run " + fixture("world_selfloop.json") +
                           " --ticks 5 --trace /tmp/hsg_cli_trace.txt";
  RunResult a = run_cli(args);
  CHECK(a.exit_code == 0);
  const std::string trace1 = read_file("/tmp/hsg_cli_trace.txt");
  CHECK(trace1 == read_file(std::string(HSG_GOLDEN_DIR) + "/selfloop_trace.txt"));

  RunResult b = run_cli(args);
  CHECK(a.output == b.output); // summary bytes
  CHECK(read_file("/tmp/hsg_cli_trace.txt") == trace1);

  SUBCASE("zero ticks give an empty trace and zero summary") {
    RunResult z = run_cli("sim run " + fixture("world_selfloop.json") +
                          " --ticks 0 --trace /tmp/hsg_cli_trace0.txt");
    CHECK(z.exit_code == 0);
    CHECK(read_file("/tmp/hsg_cli_trace0.txt").empty());
    CHECK(z.output.find("\"total\": 0") != std::string::npos);
  }
}

TEST_CASE("cli: sim probe respects the delay bound") {
  RunResult r = run_cli("sim probe " + fixture("world_selfloop.json") +
                        " --point n0 --tick 1 --magnitude 0.4 --horizon 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"bound_ok\": true") != std::string::npos);
  RunResult again = run_cli("sim probe " + fixture("world_selfloop.json") +
                            " --point n0 --tick 1 --magnitude 0.4 --horizon 6");
  CHECK(r.output == again.output);
}

TEST_CASE("cli: render table matches the goldens") {
  RunResult t1 = run_cli("render table " + fixture("grid_table1.json") +
                         " --rows map_level --cols state_depth");
  CHECK(t1.exit_code == 0);
  CHECK(t1.output == read_file(std::string(HSG_GOLDEN_DIR) + "/table1.txt"));
  RunResult t2 = run_cli("render table " + fixture("grid_table2.json") +
                         " --rows map_level --cols state_depth");
  CHECK(t2.output == read_file(std::string(HSG_GOLDEN_DIR) + "/table2.txt"));
  RunResult t1b = run_cli("render table " + fixture("grid_table1.json") +
                          " --rows map_level --cols state_depth");
  CHECK(t1.output == t1b.output);
}
