#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "starsem/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = starsem::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

using nlohmann::json;

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"census", "--nope"}).code == 2);
  CHECK(run_cli({"census", "--family", "Quux"}).code == 2);
  CHECK(run_cli({"census", "--n", "x"}).code == 2);
  CHECK(run_cli({"census", "--n", "5..2"}).code == 2);
  CHECK(run_cli({"eggbox", "--n", "3..4"}).code == 2);  // single n command
  CHECK(run_cli({"check"}).code == 2);

  auto r = run_cli({"check", "--family", "PsEnd", "n=3; 1->9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n=3; 1->9") != std::string::npos);  // names the input
}

TEST_CASE("help exits cleanly") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("census agrees and reports in every format") {
  auto r = run_cli(
      {"census", "--family", "all", "--n", "1..3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["tool"] == "starsem");
  CHECK(doc["command"] == "census");
  CHECK(doc["summary"]["pass"] == true);
  REQUIRE(doc["rows"].size() == 18);
  for (const auto& row : doc["rows"]) {
    CHECK(row["match"] == true);
    CHECK(row["formula_count"] == row["enumerated_count"]);
  }

  CHECK(run_cli({"census", "--family", "2PT", "--n", "4", "--format", "csv"})
            .out.find("2PT,4,128,128,true") != std::string::npos);
  CHECK(run_cli({"census", "--n", "2"}).out.find("PASS") != std::string::npos);
}

TEST_CASE("an injected formula fault flips census to exit 1") {
  setenv("SM_SELFTEST_FAULT", "census-formula", 1);
  auto r = run_cli({"census", "--family", "PwEnd", "--n", "3", "--format", "json"});
  unsetenv("SM_SELFTEST_FAULT");
  CHECK(r.code == 1);
  auto doc = json::parse(r.out);
  CHECK(doc["summary"]["pass"] == false);
  CHECK(doc["rows"][0]["match"] == false);
}

TEST_CASE("check classifies via both membership paths") {
  auto r = run_cli({"check", "--family", "PsEnd", "--format", "json",
                    "n=4; 0->1 1->0 2->0 3->0"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["member"] == true);
  CHECK(doc["rows"][0]["agree"] == true);

  auto all = run_cli({"check", "--format", "json", "n=3; 1->1 2->0"});
  REQUIRE(all.code == 0);
  auto alldoc = json::parse(all.out);
  REQUIRE(alldoc["rows"].size() == 6);
  for (const auto& row : alldoc["rows"]) {
    bool expected = row["family"] == "PwEnd" || row["family"] == "PEnd" ||
                    row["family"] == "IEnd";
    CHECK(row["member"] == expected);
  }
}

TEST_CASE("greens single pair and sweep") {
  auto pair = run_cli({"greens", "--family", "IEnd", "--relation", "R",
                       "--format", "json", "n=3; 1->0 2->1", "n=3; 1->1 2->0"});
  REQUIRE(pair.code == 0);
  auto doc = json::parse(pair.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["formula"] == true);
  CHECK(doc["rows"][0]["oracle"] == true);

  auto sweep = run_cli(
      {"greens", "--family", "PsEnd", "--n", "3", "--format", "json"});
  REQUIRE(sweep.code == 0);
  auto sdoc = json::parse(sweep.out);
  REQUIRE(sdoc["rows"].size() == 4);  // R, L, H, J summaries, no mismatches
  for (const auto& row : sdoc["rows"]) CHECK(row["disagreements"] == 0);

  CHECK(run_cli({"greens", "--family", "PsEnd", "n=3; 1->1"}).code == 2);
}

TEST_CASE("sampled greens sweeps are byte-identical under a fixed seed") {
  std::vector<std::string> args{"greens",  "--family", "PEnd", "--n",
                                "3",       "--sample", "500",  "--seed",
                                "424242",  "--format", "json"};
  auto first = run_cli(args);
  auto second = run_cli(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("eggbox report") {
  auto r = run_cli({"eggbox", "--family", "PAut", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["total"] == 22);
  CHECK(doc["rows"][0]["sums_to_cardinality"] == true);
  CHECK(doc["rows"][0]["classes"].size() == 5);
}

TEST_CASE("regular sweep") {
  auto r = run_cli({"regular", "--family", "all", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  for (const auto& row : doc["rows"]) {
    CHECK(row["mismatches"] == 0);
    CHECK(row["missing_paut_witness"] == 0);
    if (row["family"] == "PsEnd" || row["family"] == "PswEnd" ||
        row["family"] == "PAut")
      CHECK(row["nonregular"] == 0);
    else
      CHECK(row["nonregular"] != 0);
  }
}

TEST_CASE("verify-generators and rank-certify") {
  auto v = run_cli({"verify-generators", "--family", "all", "--n", "3..4",
                    "--format", "json"});
  REQUIRE(v.code == 0);
  auto vdoc = json::parse(v.out);
  CHECK(vdoc["rows"].size() == 12);
  for (const auto& row : vdoc["rows"]) CHECK(row["ok"] == true);

  auto r = run_cli({"rank-certify", "--family", "PAut", "--n", "3", "--format",
                    "json", "--jobs", "2"});
  REQUIRE(r.code == 0);
  auto rdoc = json::parse(r.out);
  REQUIRE(rdoc["rows"].size() == 1);
  CHECK(rdoc["rows"][0]["rank"] == 3);
  CHECK(rdoc["rows"][0]["family_size"] == 22);
  CHECK(rdoc["rows"][0]["levels"].size() == 3);
  CHECK(rdoc["rows"][0]["witness"].size() == 3);
}

TEST_CASE("decompose") {
  auto r = run_cli({"decompose", "--n", "1..3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["summary"]["pass"] == true);
  for (const auto& row : doc["rows"]) CHECK(row["ok"] == true);
}

TEST_CASE("environment variables mirror the flags") {
  setenv("SM_FORMAT", "json", 1);
  setenv("SM_N", "2", 1);
  auto r = run_cli({"census", "--family", "PwEnd"});
  unsetenv("SM_FORMAT");
  unsetenv("SM_N");
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["n"] == 2);
  CHECK(doc["rows"][0]["formula_count"] == "9");
}

TEST_CASE("closure caps surface as input errors") {
  auto r = run_cli({"verify-generators", "--family", "PwEnd", "--n", "4",
                    "--cap-closure", "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("element bound") != std::string::npos);
}
