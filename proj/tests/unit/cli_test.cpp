// Copyright 2026 The lars Authors
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

#include "lars/cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lars/io.hpp"

namespace lars {
namespace {

struct Run {
  int code;
  Json body;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  Json body = out.str().empty() || out.str().front() != '{' ? Json() : Json::parse(out.str());
  return {code, body, err.str()};
}

std::string temp(const std::string& name) { return ::testing::TempDir() + name; }

TEST(Cli, AxiomsAllPass) {
  const auto r = run({"axioms", "--system", "BC4:2", "--window", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.body.at("kind"), "axiom-report");
  EXPECT_TRUE(r.body.at("payload").at("all_pass").get<bool>());
  for (const auto& [k, v] : r.body.at("payload").at("verdicts").items()) EXPECT_EQ(v.at("status"), "pass") << k;
}

TEST(Cli, FiniteBcFailsWithWitness) {
  const auto r = run({"axioms", "--system", "BC4:finite"});
  EXPECT_EQ(r.code, kVerificationFailed);
  const auto& R = r.body.at("payload").at("verdicts").at("R");
  EXPECT_EQ(R.at("status"), "fail");
  EXPECT_EQ(R.at("counterexample").back().at("eps"), Json::parse(R"({"1":"2"})"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"axioms", "--system", "Q5:9"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"axioms"}).code, kUsage);
  EXPECT_EQ(run({"axioms", "--system", "A3:1", "--window", "-1"}).code, kUsage);
  EXPECT_EQ(run({"weights", "--system", "A2:1", "--finite-part", "1,0,0"}).code, kUsage);
  EXPECT_EQ(run({"iso-cert", "--pair", "A1-D1"}).code, kUsage);
  EXPECT_EQ(run({"iso-cert"}).code, kUsage);
  EXPECT_EQ(run({"gcm", "--roots", "{oops"}).code, kUsage);
  EXPECT_EQ(run({"suite", "--only", "12"}).code, kUsage);
  const auto r = run({"grading", "--system", "BC4:2", "--weight", R"({"c":"1","eps":{},"d":"0"})"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("integral"), std::string::npos);
}

TEST(Cli, UsageErrorWritesNothing) {
  const std::string out = temp("cli_never_written.json");
  std::remove(out.c_str());
  EXPECT_EQ(run({"iso-cert", "--pair", "nope", "--out", out}).code, kUsage);
  EXPECT_FALSE(std::ifstream(out).good());
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--system", "B2:finite"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.body.at("count"), 8);
}

TEST(Cli, GcmAffine) {
  const auto r = run({"gcm", "--system", "A2:1", "--roots",
                      R"([{"c":"0","eps":{"1":"1","2":"-1"},"d":"0"},{"c":"0","eps":{"1":"-1","2":"1"},"d":"1"}])"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.body.at("type"), "affine");
  EXPECT_EQ(r.body.at("witness"), Json::parse(R"(["1","1"])"));
  EXPECT_EQ(r.body.at("matrix"), Json::parse(R"([["2","-2"],["-2","2"]])"));
}

TEST(Cli, RealizeDump) {
  const std::string dump = temp("cli_realize.json");
  const auto r = run({"realize", "--system", "C3:2", "--window", "2", "--dump-roots", dump});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.body.at("catalog_match").get<bool>());
  const Json d = parse_json_argument(dump);
  EXPECT_EQ(d.at("spaces").size(), r.body.at("root_count").get<std::size_t>());
  EXPECT_EQ(d.at("cartan").size(), 3U);
  std::remove(dump.c_str());
}

TEST(Cli, GradingGenerator) {
  const auto r = run({"grading", "--system", "BC4:2", "--weight", R"({"c":"2","eps":{},"d":"0"})", "--window", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.body.at("generator"), "2");
  EXPECT_TRUE(r.body.at("transversal").get<bool>());
}

TEST(Cli, WeightsBasicLevelOne) {
  const auto r = run({"weights", "--system", "A2:1", "--level", "1", "--finite-part", "0,0", "--depth", "12"});
  EXPECT_EQ(r.code, kOk);
  std::size_t slice = 0;
  for (const auto& e : r.body.at("elements"))
    if (rational_from_json(e.at("weight").at("d")) >= Rational(-3)) ++slice;
  EXPECT_EQ(slice, 10U);
}

TEST(Cli, UnitaryReport) {
  const std::string report = temp("cli_gram.json");
  const auto r = run({"unitary", "--system", "A2:1", "--window", "3", "--report", report});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.body.at("psd").get<bool>());
  EXPECT_EQ(r.body.at("kernel_dimension"), 1);
  const auto back = run({"iso-cert", "--replay", report});
  EXPECT_EQ(back.code, kOk) << back.body.dump();
  EXPECT_EQ(back.body.at("kind"), "psd");
  std::remove(report.c_str());
}

TEST(Cli, P3Test) {
  const auto r = run({"p3-test", "--n", "4", "--samples", "50"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.body.at("conjugation_fixes_p3"), 50);
  EXPECT_EQ(r.body.at("neg_transpose_negates_p3"), 50);
}

TEST(Cli, SeedIsDeterministic) {
  const auto a = run({"--seed", "17", "iso-cert", "--pair", "A1-C2", "--n", "2"});
  const auto b = run({"iso-cert", "--pair", "A1-C2", "--n", "2", "--seed", "17"});
  const auto c = run({"--seed", "18", "iso-cert", "--pair", "A1-C2", "--n", "2"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.body, b.body);
  EXPECT_NE(a.body, c.body);
}

TEST(Cli, TamperedCertificateFails) {
  const std::string path = temp("cli_bd.json");
  ASSERT_EQ(run({"iso-cert", "--pair", "B1-D1", "--n", "2", "--window", "1", "--out", path}).code, kOk);
  Json j = parse_json_argument(path);
  auto& e_plus = j["payload"]["maps"][0]["e_plus"];
  e_plus[0][0] = "7";
  {
    std::ofstream f(path);
    f << j.dump();
  }
  EXPECT_EQ(run({"iso-cert", "--replay", path}).code, kVerificationFailed);
  std::remove(path.c_str());
}

TEST(Cli, SuiteSubset) {
  const auto r = run({"suite", "--only", "6,7"});
  EXPECT_EQ(r.code, kOk);
  ASSERT_EQ(r.body.at("checks").size(), 2U);
  EXPECT_FALSE(r.body.at("checks")[0].contains("seconds"));
  EXPECT_EQ(run({"suite", "--only", "6,7"}).body, r.body);
}

// A certificate written by one process is accepted by another.
TEST(Cli, SecondProcessReplay) {
  const std::string path = temp("cli_cbc.json");
  const std::string bin = LARS_CLI_PATH;
  ASSERT_EQ(std::system((bin + " iso-cert --pair C2-BC2 --n 2 --window 2 --out " + path + " > /dev/null").c_str()), 0);
  EXPECT_EQ(std::system((bin + " iso-cert --replay " + path + " > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " axioms --system Q5:9 > /dev/null 2>&1").c_str()), 0);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace lars
