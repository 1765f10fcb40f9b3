#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MVKIT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("gmatrix lattice for B2 has eight nodes") {
  RunResult r = run_cli("gmatrix-lattice --type B2 --format json");
  CHECK(r.exit_code == 0);
  size_t count = 0, pos = 0;
  while ((pos = r.out.find("\"g\"", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 8);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string& args :
       {std::string("gmatrix-lattice --type A3"), std::string("layers --type B2 --word 1,2,1,2"),
        std::string("mv-build --type B2 --word 1,2,1,2 --a 1,1,1,1"),
        std::string("crystal-graph --type A2 --height 3 --format dot")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("transition subcommand") {
  RunResult r = run_cli("lusztig-transition --type B2 --word 2,1,2,1 --a 1,1,2,2 --target 1,2,1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("3") != std::string::npos);
  RunResult fixed =
      run_cli("lusztig-transition --type B2 --word 1,2,1,2 --a 1,1,1,1 --target 2,1,2,1 --trace");
  CHECK(fixed.exit_code == 0);
  CHECK(fixed.out.find("braid4") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("no-such-verb").exit_code == 2);
  CHECK(run_cli("layers --type B2").exit_code == 2);  // missing --word
}

TEST_CASE("domain errors exit with 1 and a named error") {
  RunResult r = run_cli("crystal-verify --type G2 --height 3");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("G2Unsupported") != std::string::npos);
  RunResult bad = run_cli("layers --type B2 --word 1,1");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("NotReduced") != std::string::npos);
}

TEST_CASE("cartan-validate accepts inline JSON input") {
  RunResult r = run_cli(
      "cartan-validate --input '{\"cartan\": [[2,-1],[-2,2]]}'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("B2/C2") != std::string::npos);
  CHECK(r.out.find("\"symmetrizer\"") != std::string::npos);
}

TEST_CASE("crystal-verify passes on B2") {
  RunResult r = run_cli("crystal-verify --type B2 --height 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  RunResult f = run_cli("crystal-verify --type B2 --height 4 --fault-f");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("crystal-op subcommand") {
  RunResult wt = run_cli("crystal-op --type B2 --word 1,2,1,2 --a 1,0,0,0 --op wt");
  CHECK(wt.exit_code == 0);
  CHECK(wt.out.find("\"wt\"") != std::string::npos);
  RunResult phi = run_cli("crystal-op --type B2 --word 1,2,1,2 --a 1,0,0,0 --op phi --i 1");
  CHECK(phi.exit_code == 0);
  CHECK(phi.out.find("\"phi\": 1") != std::string::npos);
  RunResult bottom = run_cli("crystal-op --type B2 --word 1,2,1,2 --a 0,0,0,0 --op f --i 1");
  CHECK(bottom.exit_code == 0);
  CHECK(bottom.out.find("null") != std::string::npos);
}

TEST_CASE("mv-verify on random data") {
  RunResult r = run_cli("mv-verify --type C2 --random 10 --seed 5 --max-entry 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("MVKIT_SIZE_GUARD caps enumeration") {
  std::string save = std::string(MVKIT_CLI_PATH);
  std::string cmd = "MVKIT_SIZE_GUARD=5 " + save + " weyl-words --type A3 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(out.find("SizeGuard") != std::string::npos);
}
