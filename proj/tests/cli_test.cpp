#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kBin = PGOG_CLI_BIN;
const std::string kFix = PGOG_FIXTURE_DIR;

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = (std::filesystem::temp_directory_path() / "pgog_cli_out.txt").string();
  std::string cmd = kBin + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + kFix + "/dihedral.json").code == 0);
  CHECK(run("validate " + kFix + "/c3amalgam.json").code == 0);
  CHECK(run("validate /nonexistent.json").code == 2);
}

TEST_CASE("validate rejects broken input") {
  std::string bad = (std::filesystem::temp_directory_path() / "bad.json").string();
  std::ofstream(bad) << "{\"p\": 2}";
  RunResult r = run("validate " + bad);
  CHECK(r.code == 2);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("reduce") {
  RunResult r = run("reduce " + kFix + "/collapsible.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("|V| 3 -> 1") != std::string::npos);

  CHECK(run("reduce " + kFix + "/collapsible.json --order random").code == 2);
  CHECK(run("reduce " + kFix + "/collapsible.json --order random --seed 5").code == 0);

  std::string out = (std::filesystem::temp_directory_path() / "reduced.json").string();
  CHECK(run("reduce " + kFix + "/collapsible.json -o " + out).code == 0);
  CHECK(run("validate " + out).code == 0);
}

TEST_CASE("present") {
  RunResult r = run("present " + kFix + "/theta.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("t1") != std::string::npos);
  CHECK(run("present " + kFix + "/theta.json --json").code == 0);
}

TEST_CASE("worked example pipeline") {
  RunResult lim = run("verify limitation " + kFix + "/c3amalgam.json --quotient " +
                      kFix + "/c3q.json");
  CHECK(lim.code == 0);
  CHECK(lim.out.find("|E|=2") != std::string::npos);  // delta
  CHECK(lim.out.find("index=3") != std::string::npos);

  std::string out = (std::filesystem::temp_directory_path() / "delta0.json").string();
  RunResult dec = run("decompose " + kFix + "/c3amalgam.json --quotient " + kFix +
                      "/c3q.json -o " + out);
  CHECK(dec.code == 0);
  CHECK(run("validate " + out).code == 0);
  CHECK(std::filesystem::exists(out + ".transversal.json"));
}

TEST_CASE("verify subcommands") {
  CHECK(run("verify confluence " + kFix + "/collapsible.json --seed 3").code == 0);
  CHECK(run("verify confluence " + kFix + "/collapsible.json").code == 2);
  CHECK(run("verify partition " + kFix + "/c2amalgam.json --quotient " + kFix +
            "/c2q.json").code == 0);
  // quotient for the wrong prime
  CHECK(run("verify partition " + kFix + "/c3amalgam.json --quotient " + kFix +
            "/c2q.json").code == 2);
}

TEST_CASE("wilkes") {
  RunResult stage = run("wilkes --p 2 --stage 2");
  CHECK(stage.code == 0);
  CHECK(stage.out.find("|G|=64") != std::string::npos);

  CHECK(run("wilkes --p 2 --stage 4").code == 2);
  CHECK(run("wilkes --p 2").code == 2);

  std::string out = (std::filesystem::temp_directory_path() / "chain2.json").string();
  CHECK(run("wilkes --p 2 --emit-chain 2 -o " + out).code == 0);
  CHECK(run("validate " + out).code == 0);
  RunResult red = run("reduce " + out);
  CHECK(red.out.find("|E| 1 -> 1") != std::string::npos);
}

TEST_CASE("corpus") {
  RunResult r = run("corpus --count 4 --seed 12 --jobs 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("4 instances, 0 findings") != std::string::npos);

  RunResult j = run("corpus --count 2 --seed 12 --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"findings\": 0") != std::string::npos);

  CHECK(run("corpus --count 2").code == 2);  // no seed
}

TEST_CASE("usage errors") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("reduce").code == 2);
  CHECK(run("verify limitation " + kFix + "/c3amalgam.json").code == 2);
}
