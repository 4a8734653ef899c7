// Copyright 2026 The Tuttice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "expect_error.hpp"
#include "json.hpp"
#include "test_support.hpp"
#include "tuttice/cli.hpp"
#include "tuttice/io.hpp"
#include "tuttice/polymatroid.hpp"
#include "tuttice/qpoly.hpp"

namespace tuttice {
namespace {

using nlohmann::json;
using testing::doubled;
using testing::sample;
using testing::X;
using testing::Y;

constexpr const char* kSample = R"({"type":"bases","vectors":[[1,0,0],[0,1,0]]})";
constexpr const char* kDoubled =
    R"({"type":"table","n":3,"rank":{"":0,"1":2,"2":2,"12":2,"3":0,"13":2,"23":2,"123":2}})";

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) {
  return std::string(TUTTICE_TEST_DATA_DIR) + "/" + name;
}

TEST(ParsePolymatroid, AllForms) {
  EXPECT_EQ(parse_polymatroid(kSample), sample());
  EXPECT_EQ(parse_polymatroid(kDoubled), doubled());
  EXPECT_EQ(parse_polymatroid(R"({"type":"uniform","r":1,"n":2})"), uniform_matroid(1, 2));
  EXPECT_EQ(parse_polymatroid(R"({"type":"graph","vertices":3,"edges":[[1,2],[2,3],[1,3]]})"),
            uniform_matroid(2, 3));
}

TEST(ParsePolymatroid, Errors) {
  EXPECT_TUTTICE_ERROR(parse_polymatroid("{"), ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_polymatroid("[]"), ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"uniform","r":1})"),
                       ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"sphere"})"), ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"table","n":1,"rank":{"":0}})"),
                       ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(
      parse_polymatroid(R"({"type":"table","n":1,"rank":{"":0,"1":1,"2":1}})"),
      ErrorCode::kMalformedInput);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"table","n":1,"rank":{"":1,"1":1}})"),
                       ErrorCode::kAxiomViolation);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"graph","vertices":2,"edges":[[1,5]]})"),
                       ErrorCode::kInvalidEdge);
  EXPECT_TUTTICE_ERROR(parse_polymatroid(R"({"type":"bases","vectors":[[2,0],[0,2]]})"),
                       ErrorCode::kNotAPolymatroidBaseSet);
}

TEST(PolymatroidJson, RoundTrips) {
  for (const auto& [name, m] : testing::corpus_up_to(6)) {
    EXPECT_EQ(parse_polymatroid(polymatroid_to_json(m)), m) << name;
  }
  EXPECT_EQ(parse_polymatroid(polymatroid_to_json(doubled())), doubled());
  const json j = json::parse(polymatroid_to_json(sample()));
  EXPECT_EQ(j["type"], "table");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["rank"]["13"], 1);
  EXPECT_EQ(j["rank"]["3"], 0);
}

TEST(PolynomialJson, FormatAndRoundTrip) {
  const BivarPoly t = X() * Y() + Y() * Y();
  EXPECT_EQ(polynomial_to_json(t),
            R"({"vars":["x","y"],"terms":[{"i":1,"j":1,"c":1},{"i":0,"j":2,"c":1}]})");
  EXPECT_EQ(parse_polynomial(polynomial_to_json(t)), t);
  const BivarPoly big = pow(X() + Y(), 80);
  const json j = json::parse(polynomial_to_json(big));
  bool saw_string = false;
  for (const auto& term : j["terms"]) saw_string = saw_string || term["c"].is_string();
  EXPECT_TRUE(saw_string);
  EXPECT_EQ(parse_polynomial(polynomial_to_json(big)), big);
  EXPECT_TUTTICE_ERROR(parse_polynomial(R"({"terms":[{"i":1}]})"), ErrorCode::kMalformedInput);
}

TEST(Cli, DocumentedExamples) {
  const RunResult q = run({"qprime", "-i", data_file("small.json")});
  ASSERT_EQ(q.code, cli::kOk) << q.err;
  EXPECT_EQ(json::parse(q.out)["pretty"], "x^2 + 2xy + y^2 - x - y");
  EXPECT_EQ(parse_polynomial(json::parse(q.out)["polynomial"].dump()),
            X() * X() + 2 * X() * Y() + Y() * Y() - X() - Y());

  const RunResult c = run({"count", "-i", data_file("small.json"), "--t", "2", "--u", "1"});
  ASSERT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_EQ(json::parse(c.out)["count"], 16);

  const RunResult t = run({"tutte", "-i", data_file("small.json")});
  ASSERT_EQ(t.code, cli::kOk) << t.err;
  EXPECT_EQ(json::parse(t.out)["pretty"], "xy + y^2");
}

TEST(Cli, ReadsStdinAndInlineJson) {
  const RunResult a = run({"count", "--t", "1", "--u", "1"}, kSample);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(json::parse(a.out)["count"], 10);
  const RunResult b = run({"count", "--json", kSample, "--t", "1", "--u", "1"});
  EXPECT_EQ(b.out, a.out);
}

TEST(Cli, Grid) {
  const RunResult g = run({"grid", "--t", "2", "--u", "2"}, kSample);
  ASSERT_EQ(g.code, cli::kOk) << g.err;
  EXPECT_EQ(json::parse(g.out)["grid"], json::parse("[[2,5,9],[5,10,16],[9,16,24]]"));
}

TEST(Cli, PrettyFormats) {
  EXPECT_EQ(run({"qpoly", "--format", "pretty"}, kSample).out,
            "binom(t,2) + 2tu + binom(u,2) + 3t + 3u + 2\n");
  EXPECT_EQ(run({"qprime", "--format", "pretty"}, kDoubled).out, "x^2 + 2xy + y^2 - 1\n");
  EXPECT_EQ(run({"tutte", "--format", "pretty"}, kSample).out, "xy + y^2\n");
}

TEST(Cli, TutteMethodsAgree) {
  for (const char* method : {"qprime", "corank", "activity"}) {
    const RunResult r = run({"tutte", "--method", method}, kSample);
    ASSERT_EQ(r.code, cli::kOk) << method << ": " << r.err;
    EXPECT_EQ(json::parse(r.out)["pretty"], "xy + y^2") << method;
  }
  const RunResult bad = run({"tutte"}, kDoubled);
  EXPECT_EQ(bad.code, cli::kInputError);
}

TEST(Cli, BasesAndActivities) {
  const json bases = json::parse(run({"bases"}, kSample).out);
  EXPECT_EQ(bases["count"], 2);
  EXPECT_EQ(bases["bases"], json::parse("[[0,1,0],[1,0,0]]"));

  const json act = json::parse(run({"activity"}, kSample).out);
  EXPECT_EQ(act["records"][0]["internal_active"], json::parse("[1,3]"));
  EXPECT_EQ(act["records"][0]["internal_inactive"], 1);
  EXPECT_EQ(act["internal_polynomial"]["coefficients"], json::parse("[1,1]"));
  const json rev = json::parse(run({"activity", "--order", "reversed"}, kSample).out);
  EXPECT_EQ(rev["order"], json::parse("[3,2,1]"));
  EXPECT_EQ(rev["internal_polynomial"], act["internal_polynomial"]);
}

TEST(Cli, DawsonTopdegAndPoset) {
  const json d = json::parse(run({"dawson"}, kSample).out);
  EXPECT_EQ(d["valid"], true);
  EXPECT_EQ(d["intervals"].size(), 2U);
  EXPECT_EQ(d["intervals"][0]["upper"], json::parse("[1,3]"));
  const json t = json::parse(run({"topdeg"}, kSample).out);
  EXPECT_EQ(t["count"], 4);
  const json p = json::parse(run({"poset"}, kSample).out);
  EXPECT_EQ(p["elements"].size(), 6U);
  EXPECT_EQ(p["cubes"].size(), 2U);
}

TEST(Cli, VerifyExamples) {
  const RunResult full = run({"verify", "--level", "full"}, kSample);
  EXPECT_EQ(full.code, cli::kOk) << full.out;
  const json report = json::parse(full.out);
  EXPECT_EQ(report["status"], "pass");
  int passed = 0;
  for (const auto& check : report["checks"]) {
    passed += check["status"] == "pass" ? 1 : 0;
    // Checks that do not apply (e.g. connectivity-dependent ones) may skip.
    EXPECT_TRUE(check["status"] == "pass" || check["status"] == "skip") << check.dump();
    EXPECT_FALSE(check["statement"].get<std::string>().empty());
  }
  EXPECT_GE(passed, 20);

  const RunResult m2 = run({"verify", "--level", "full"}, kDoubled);
  const json m2_report = json::parse(m2.out);
  std::map<std::string, std::string> status;
  for (const auto& check : m2_report["checks"]) status[check["name"]] = check["status"];
  EXPECT_EQ(status["sign_alternation"], "info");
  EXPECT_EQ(status["coverage"], "info");
  EXPECT_EQ(status["tutte_from_qprime"], "skip");
  EXPECT_EQ(status["coefficient_interpretation"], "skip");
  EXPECT_EQ(status["duality"], "pass");

  const RunResult u24 = run({"verify", "--json", R"({"type":"uniform","r":2,"n":4})"});
  EXPECT_EQ(u24.code, cli::kOk) << u24.out;
  EXPECT_EQ(json::parse(u24.out)["status"], "pass");
}

TEST(Cli, VerifyCorpus) {
  const RunResult r = run({"verify", "--corpus", "default"});
  EXPECT_EQ(r.code, cli::kOk) << r.out.substr(0, 2000);
}

TEST(Cli, InputErrorsAreOneLineJson) {
  const std::vector<std::vector<std::string>> cases{
      {"count", "-i", "/nonexistent/file.json"},
      {"count", "--json", "{"},
      {"count", "--json", R"({"type":"table","n":1,"rank":{"":1,"1":1}})"},
      {"frobnicate"},
      {},
      {"count", "--json", kSample, "--t", "-1"},
  };
  for (const auto& args : cases) {
    const RunResult r = run(args);
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_TRUE(r.out.empty());
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
    const json e = json::parse(r.err);
    EXPECT_TRUE(e.contains("error"));
    EXPECT_TRUE(e.contains("message"));
  }
  EXPECT_EQ(json::parse(run({"count", "--json", "{"}).err)["error"], "MalformedInput");
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* cmd : {"bases", "qprime", "activity", "poset", "verify"}) {
    const RunResult a = run({cmd, "-i", data_file("k4.json")});
    const RunResult b = run({cmd, "-i", data_file("k4.json")});
    EXPECT_EQ(a.code, cli::kOk) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

}  // namespace
}  // namespace tuttice
