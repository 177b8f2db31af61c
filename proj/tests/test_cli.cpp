#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// runs the installed binary with the given arguments, capturing exit code and
// combined output
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string tmp = "/tmp/cg23_cli_" + std::to_string(++counter) + ".txt";
  std::string cmd = std::string(CG23_BIN) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(tmp);
  std::remove(tmp.c_str());
  return r;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("certify command reproduces the small symplectic certificate") {
  RunResult r = run_cli("certify --family sp6 --q 2 --a 1 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("OVERALL: PASS") != std::string::npos);
  CHECK(r.out.find("1451520") != std::string::npos);
  CHECK(r.out.find("CHECK group-order: PASS") != std::string::npos);
}

TEST_CASE("unitary parameter inside the base field is a usage-level error") {
  RunResult r = run_cli("certify --family u7 --q 5 --a 2");
  CHECK(r.code == 2);
  CHECK(r.out.find("outside the fixed field") != std::string::npos);
}

TEST_CASE("table command checks all eight published rows") {
  RunResult r = run_cli("table");
  CHECK(r.code == 0);
  CHECK(count_occurrences(r.out, "ROW q=") == 8);
  CHECK(count_occurrences(r.out, "FAIL") == 0);
  CHECK(r.out.find("TABLE: PASS") != std::string::npos);
  for (const char* q : {"q=3 ", "q=4 ", "q=5 ", "q=7 ", "q=8 ", "q=9 ", "q=11 ", "q=13 "})
    CHECK(r.out.find(std::string("ROW ") + q) != std::string::npos);

  RunResult j = run_cli("table --json");
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["rows"].size() == 8);
}

TEST_CASE("json certificates carry the full schema and reproduce byte-for-byte") {
  std::string cmd = "certify --family sp6 --q 4 --a 0,1 --seed 11 --json";
  RunResult r1 = run_cli(cmd);
  RunResult r2 = run_cli(cmd);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  nlohmann::json j = nlohmann::json::parse(r1.out);
  for (const char* key : {"family", "q", "p", "n", "modulus", "a", "b", "checks", "order", "seed",
                          "version"})
    CHECK(j.contains(key));
  CHECK(j["family"] == "sp6");
  CHECK(j["q"] == 4);
  CHECK(j["modulus"] == "1,1,1");
  CHECK(j["order"]["computed"] == "4106059776000");
  CHECK(j["order"]["expected"] == "4106059776000");
  CHECK(j["seed"] == 11);
  for (const auto& ck : j["checks"]) {
    CHECK(ck.contains("name"));
    CHECK(ck.contains("verdict"));
    CHECK(ck.contains("details"));
    CHECK(ck["verdict"] == "pass");
  }
}

TEST_CASE("search exit codes distinguish found from not found") {
  CHECK(run_cli("search --family o7 --q 7").code == 0);
  CHECK(run_cli("search --family o7 --q 3").code == 1);
  // the base-2 unitary case has no admissible uniform parameter
  CHECK(run_cli("search --family u7 --q 2").code == 1);

  RunResult j = run_cli("search --family o7 --q 7 --json");
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["found"] == true);
  CHECK(doc["a"] == "3");
  CHECK(doc["strategy"] == "exhaustive");

  CHECK(run_cli("search --family o7 --q 7 --strategy primitive-first").code == 0);
  CHECK(run_cli("search --family o7 --q 7 --strategy nope").code == 2);
}

TEST_CASE("conditions command reports and sets the exit code") {
  RunResult good = run_cli("conditions --family o7 --q 7 --a 3");
  CHECK(good.code == 0);
  CHECK(good.out.find("CONDITIONS: PASS") != std::string::npos);

  RunResult bad = run_cli("conditions --family o7 --q 7 --a 2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("CONDITION i-excluded-values: FAIL") != std::string::npos);
  CHECK(bad.out.find("CONDITIONS: FAIL") != std::string::npos);
}

TEST_CASE("usage and precondition errors exit with code 2") {
  CHECK(run_cli("").code == 2);                                  // missing subcommand
  CHECK(run_cli("frobnicate").code == 2);                        // unknown subcommand
  CHECK(run_cli("build --family sp6 --a 1").code == 2);          // no field given
  CHECK(run_cli("build --family nope --q 2 --a 1").code == 2);   // unknown family
  CHECK(run_cli("certify --family sp6 --q 7 --a 1").code == 2);  // wrong parity
  CHECK(run_cli("certify --family sp6 --q 2").code == 2);        // missing --a
  CHECK(run_cli("certify --family sp6 --q 2 --field 4 --a 1").code == 2);  // both field forms
  CHECK(run_cli("certify --family sp6 --q 2 --a 1 --json --text").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("certify --help").code == 0);
}

TEST_CASE("check failures exit with code 1") {
  RunResult r = run_cli("certify --family o7 --q 7 --a 2");
  CHECK(r.code == 1);
  CHECK(r.out.find("CHECK conditions: FAIL") != std::string::npos);
  CHECK(r.out.find("OVERALL: FAIL") != std::string::npos);

  // a = 1 in GF(4) builds fine but does not generate the field
  RunResult f = run_cli("certify --family sp6 --q 4 --a 1");
  CHECK(f.code == 1);
  CHECK(f.out.find("CHECK field-generation: FAIL") != std::string::npos);
}

TEST_CASE("build prints the pair in both formats") {
  RunResult t = run_cli("build --family sp6 --q 2 --a 1");
  CHECK(t.code == 0);
  CHECK(t.out.find("x =") != std::string::npos);
  CHECK(t.out.find("y =") != std::string::npos);

  RunResult j = run_cli("build --family su7-4 --json");
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["family"] == "su7-4");
  CHECK(doc["q"] == 4);
  CHECK(doc["x"].size() == 7);
  CHECK(doc["x"][0].size() == 7);

  // explicit field text is accepted
  CHECK(run_cli("build --family sp6 --field 2^2/1,1,1 --a 0,1").code == 0);
}

TEST_CASE("sweep command runs the identity groups") {
  RunResult r = run_cli("sweep --qmax 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("all identities hold") != std::string::npos);

  RunResult j = run_cli("sweep --qmax 5 --json");
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["all_ok"] == true);
  CHECK(doc["q_max"] == 5);
  CHECK(doc["groups"].size() == 11);
}

TEST_CASE("enumerate counts small groups and respects the cap") {
  RunResult r = run_cli("enumerate --family sp6 --q 2 --a 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("order 1451520") != std::string::npos);

  RunResult capped = run_cli("enumerate --family sp6 --q 2 --a 1 --cap 100");
  CHECK(capped.code == 1);
  CHECK(capped.out.find("exceeded") != std::string::npos);

  RunResult j = run_cli("enumerate --family sp6 --q 2 --a 1 --json");
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == 1451520);

  RunResult jc = run_cli("enumerate --family sp6 --q 2 --a 1 --cap 100 --json");
  CHECK(jc.code == 1);
  nlohmann::json dc = nlohmann::json::parse(jc.out);
  CHECK(dc["order"].is_null());
  CHECK(dc["cap"] == 100);
}

TEST_CASE("output can be redirected to a file") {
  std::string path = "/tmp/cg23_cert_out.json";
  std::remove(path.c_str());
  RunResult r = run_cli("certify --family sp6 --q 2 --a 1 --json --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["order"]["computed"] == "1451520");
  std::remove(path.c_str());
}

}  // TEST_SUITE
