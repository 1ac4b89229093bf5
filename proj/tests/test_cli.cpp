#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semlab/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "semlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = semlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(),
                                  out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("emulate reports the canonical representation") {
  auto r = run({"emulate", "--language", "arith", "--expr", "2+2"});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "emulate");
  CHECK(j["result"]["representation"]["index"] == "5");
  CHECK(j["result"]["representation"]["canonical"] == "4");
  CHECK(j["result"]["precheck"]["passed"] == true);
  CHECK(j["warnings"].empty());
  CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("emulate with a relation emits a table") {
  auto r = run({"emulate", "--expr", "2+2", "--rel", "leq"});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["result"]["table"]["subject"] == "2+2");
  CHECK(j["result"]["table"]["entries"].size() > 0);
}

TEST_CASE("emulate on LEQ warns about the precheck") {
  auto r = run({"emulate", "--language", "leq", "--m", "5", "--expr", "leq()"});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["result"]["representation"]["index"] == "0");
  CHECK(j["result"]["precheck"]["passed"] == false);
  REQUIRE(j["warnings"].size() == 1);
  CHECK(r.err.find("precheck") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2 with the partial transcript") {
  auto r = run({"emulate", "--expr", "2+2", "--budget", "3"});
  CHECK(r.code == 2);
  auto j = json_of(r);
  CHECK(j["result"]["partial_transcript"]["entries"].size() == 3);
  CHECK(j["outcome"]["exit_code"] == 2);
}

TEST_CASE("adversary examples") {
  auto naive = json_of(run({"adversary", "--emulator", "naive"}));
  CHECK(naive["result"]["m_prime"] == "1");
  CHECK(naive["result"]["refuted_language"] == "L_1");
  auto bs = run({"adversary", "--emulator", "binary-search", "--N", "100"});
  CHECK(bs.code == 0);
  CHECK(json_of(bs)["result"]["m_prime"] == "101");
  auto a = run({"adversary", "--emulator", "random", "--seed", "7"});
  auto b = run({"adversary", "--emulator", "random", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("modal commands") {
  auto one = run({"modal", "verify-box", "--worlds", "1"});
  CHECK(one.code == 0);
  CHECK(json_of(one)["result"]["counterexamples"] == 0);
  auto diamond = run({"modal", "sweep-diamond", "--worlds", "2", "--exprs",
                      "2", "--ctxs", "1"});
  CHECK(diamond.code == 0);
  CHECK(json_of(diamond)["result"]["counterexamples"] > 0);
  auto example = run({"modal", "diamond-example"});
  CHECK(example.code == 0);
  CHECK(json_of(example)["result"]["underspecified"] == true);
}

TEST_CASE("complexity formats") {
  auto j = run({"complexity", "--N", "1"});
  CHECK(j.code == 0);
  const auto report = json_of(j);
  for (const auto& row : report["result"]["rows"]) {
    CHECK(row["binary"] <= 2);
  }
  auto csv = run({"--format", "csv", "complexity", "--N", "1,10"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("N,m,binary,linear\n", 0) == 0);
  auto after = run({"complexity", "--N", "10", "--format", "csv"});
  CHECK(after.out.rfind("N,m,binary,linear\n", 0) == 0);
}

TEST_CASE("transparency commands") {
  auto arith = run({"transparency", "--language", "arith"});
  CHECK(arith.code == 0);
  CHECK(json_of(arith)["result"]["passed"] == true);
  auto leq = run({"transparency", "--language", "leq", "--m", "5"});
  CHECK(leq.code == 0);
  bool found = false;
  const auto report = json_of(leq);
  for (const auto& e : report["result"]["witness_expressions"]) {
    found = found || e == "leq()";
  }
  CHECK(found);
  auto in = run({"transparency", "--language", "leq-in", "--set", "2,4"});
  CHECK(in.code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"emulate"}).code == 2);
  CHECK(run({"emulate", "--expr", "1", "--language", "leq", "--m", "x"}).code ==
        2);
  CHECK(run({"emulate", "--expr", "1", "--rel", "~"}).code == 2);
  CHECK(run({"--format", "csv", "emulate", "--expr", "1"}).code == 2);
  CHECK(run({"adversary", "--emulator", "oracle"}).code == 2);
  CHECK(run({"modal"}).code == 2);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("emulate") != std::string::npos);
}

TEST_CASE("timing is opt-in and separate from the result") {
  auto r = run({"--timing", "modal", "diamond-example"});
  auto j = json_of(r);
  CHECK(j.contains("timing"));
  CHECK_FALSE(j["result"].contains("timing"));
}
