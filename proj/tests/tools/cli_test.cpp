// Copyright 2026 The symcoh Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "symcoh/reports.hpp"

namespace symcoh::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, CohomologyOfSu2) {
  const auto r = call({"cohomology", "--group", "SU(2)", "--max-degree", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["betti"], Json::parse("[1, 0, 0, 1]"));
}

TEST(Cli, NczFailsForSl2) {
  const auto r = call({"ncz", "--group", "SL(2,R)", "--max-degree", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["ncz"]["verdict"], false);
  EXPECT_EQ(doc["ncz"]["first_failure"], 2);
}

TEST(Cli, ReportEulerLine) {
  const auto r = call({"report", "--group", "SL(4,R)", "--max-degree", "4", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["epsilon"]["4"], Json::parse(R"({"rank": 1, "nonzero_monomials": ["E_2"]})"));
  const auto back = report_from_json(doc);
  EXPECT_EQ(to_json(back), doc);
  const auto text = call({"report", "--group", "SL(4,R)", "--max-degree", "4"});
  EXPECT_NE(text.out.find("epsilon^4(E_2) != 0"), std::string::npos);
}

TEST(Cli, RelativeIncludesDual) {
  const auto r = call({"relative", "--group", "SL(3,R)", "--max-degree", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["relative_betti"], Json::parse("[1, 0, 0, 0, 0, 1]"));
  EXPECT_EQ(doc["dual_relative_betti"], doc["relative_betti"]);
}

TEST(Cli, ChernWeilAndEpsilon) {
  const auto cw = call({"chern-weil", "--group", "Sp(2,R)", "--max-degree", "4", "--format", "json"});
  ASSERT_EQ(cw.code, kExitOk) << cw.err;
  const Json forms = Json::parse(cw.out)["forms"];
  ASSERT_EQ(forms.size(), 2u);
  EXPECT_EQ(forms[0]["name"], "C_1");
  EXPECT_EQ(forms[0]["nonzero"], true);
  const auto eps = call({"epsilon", "--group", "Sp(2,R)", "--max-degree", "4", "--format", "json"});
  ASSERT_EQ(eps.code, kExitOk) << eps.err;
  EXPECT_EQ(Json::parse(eps.out)["epsilon"]["4"]["rank"], 1);
}

TEST(Cli, DualAndCrosscheck) {
  const auto d = call({"dual", "--group", "SL(2,C)", "--format", "json"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(Json::parse(d.out)["negative_definite"], true);
  const auto c = call({"crosscheck", "--group", "SU*(4)", "--format", "json"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(Json::parse(c.out)["passed"], true);
}

TEST(Cli, CustomPairFromFiles) {
  const auto algebra = write_temp("symcoh_cli_sl2.json", R"({
    "dim": 3, "basis": ["h", "e", "f"],
    "brackets": [{"i": 0, "j": 1, "result": [[1, 2]]},
                 {"i": 0, "j": 2, "result": [[2, -2]]},
                 {"i": 1, "j": 2, "result": [[0, 1]]}]})");
  const auto dec = write_temp("symcoh_cli_sl2_dec.json", R"({
    "k_basis": [[0, 1, -1]], "p_basis": [[1, 0, 0], [0, 1, 1]]})");
  const auto r = call({"relative", "--algebra", algebra.string(), "--decomposition", dec.string(), "--max-degree",
                       "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["relative_betti"], Json::parse("[1, 0, 1]"));
  const auto plain = call({"cohomology", "--algebra", algebra.string(), "--max-degree", "3"});
  EXPECT_EQ(plain.code, kExitOk) << plain.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"cohomology"}).code, kExitUsage);
  EXPECT_EQ(call({"cohomology", "--group", "SU(2)", "--algebra", "x.json"}).code, kExitUsage);
  EXPECT_EQ(call({"report", "--group", "SU(2)", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, ValidationErrors) {
  const auto unknown = call({"report", "--group", "GL(2,R)", "--format", "json"});
  EXPECT_EQ(unknown.code, kExitValidation);
  EXPECT_EQ(Json::parse(unknown.out)["error"]["kind"], "UnknownGroup");

  const auto guard = call({"cohomology", "--group", "SU(3)", "--max-degree", "3", "--max-exterior-dim", "4",
                           "--format", "json"});
  EXPECT_EQ(guard.code, kExitValidation);
  EXPECT_EQ(Json::parse(guard.out)["error"]["kind"], "SizeLimit");

  const auto jacobi = write_temp("symcoh_cli_bad.json", R"({
    "dim": 3, "brackets": [{"i": 0, "j": 1, "result": [[1, 1]]},
                           {"i": 1, "j": 2, "result": [[0, 1]]}]})");
  const auto bad = call({"cohomology", "--algebra", jacobi.string(), "--format", "json"});
  EXPECT_EQ(bad.code, kExitValidation);
  const Json err = Json::parse(bad.out)["error"];
  EXPECT_EQ(err["kind"], "JacobiViolation");
  EXPECT_TRUE(err.contains("witness"));
}

TEST(Cli, EnvironmentGuard) {
  ::setenv("SYMCOH_MAX_EXTERIOR_DIM", "2", 1);
  EXPECT_EQ(call({"cohomology", "--group", "SU(2)", "--max-degree", "3"}).code, kExitValidation);
  EXPECT_EQ(call({"cohomology", "--group", "SU(2)", "--max-degree", "3", "--max-exterior-dim", "100"}).code, kExitOk);
  ::setenv("SYMCOH_MAX_EXTERIOR_DIM", "lots", 1);
  EXPECT_EQ(call({"cohomology", "--group", "SU(2)"}).code, kExitUsage);
  ::unsetenv("SYMCOH_MAX_EXTERIOR_DIM");
}

}  // namespace
}  // namespace symcoh::cli
