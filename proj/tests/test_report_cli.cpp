// Copyright 2026 The fracgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fracgap/cli.hpp"
#include "fracgap/errors.hpp"
#include "fracgap/report.hpp"

namespace fracgap {
namespace {

using report::Format;
using report::ReportRow;
using report::ReportWriter;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

TEST(Report, FormatDouble) {
  EXPECT_EQ(report::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(report::format_double(2.0), "2");
  EXPECT_EQ(report::format_double(std::nan("")), "nan");
  EXPECT_EQ(report::format_double(INFINITY), "inf");
  EXPECT_EQ(report::format_double(-INFINITY), "-inf");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(report::format_double(x)), x);
}

TEST(Report, CellsAndQuoting) {
  EXPECT_EQ(report::csv_cell(report::Value{std::string("plain")}), "plain");
  EXPECT_EQ(report::csv_cell(report::Value{std::string("a,b")}), "\"a,b\"");
  EXPECT_EQ(report::csv_cell(report::Value{std::string("say \"hi\"")}), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(report::csv_cell(report::Value{true}), "true");
  EXPECT_EQ(report::json_value(report::Value{std::nan("")}), "null");
  EXPECT_EQ(report::json_value(report::Value{std::string("q\"")}), "\"q\\\"\"");
}

TEST(Report, RowSetKeepsTypes) {
  ReportRow r;
  r.set("b", true).set("i", -3).set("u", std::size_t{7}).set("d", 0.5).set("s", "x");
  const auto& c = r.cells();
  EXPECT_TRUE(std::holds_alternative<bool>(c[0].second));
  EXPECT_TRUE(std::holds_alternative<std::int64_t>(c[1].second));
  EXPECT_TRUE(std::holds_alternative<std::uint64_t>(c[2].second));
  EXPECT_TRUE(std::holds_alternative<double>(c[3].second));
  EXPECT_TRUE(std::holds_alternative<std::string>(c[4].second));
}

TEST(ReportWriter, Csv) {
  std::ostringstream out;
  ReportWriter w(out, Format::csv, "t.v1", {"k", "v"});
  w.write(ReportRow().set("k", "a").set("v", 1.5));
  w.write(ReportRow().set("k", "b,c").set("v", 2));
  w.finish({"t", {}, {}, "0", 0.0});
  EXPECT_EQ(out.str(), "k,v\na,1.5\n\"b,c\",2\n");
  EXPECT_EQ(w.rows_written(), 2u);
  EXPECT_THROW(w.write(ReportRow().set("v", 1).set("k", "x")), std::logic_error);
}

TEST(ReportWriter, JsonEnvelope) {
  std::ostringstream out;
  ReportWriter w(out, Format::json, "t.v1", {"k", "v"});
  w.write(ReportRow().set("k", "a").set("v", std::nan("")));
  report::Envelope env{"t", ReportRow().set("x", 1), ReportRow().set("n", 1), "9.9", 0.25};
  w.finish(env);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["schema"], "t.v1");
  EXPECT_EQ(j["columns"], nlohmann::json::array({"k", "v"}));
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_TRUE(j["rows"][0]["v"].is_null());
  EXPECT_EQ(j["summary"]["n"], 1);
  EXPECT_EQ(j["subcommand"], "t");
  EXPECT_EQ(j["parameters"]["x"], 1);
  EXPECT_EQ(j["version"], "9.9");
  EXPECT_EQ(j["wall_time_s"], 0.25);
  EXPECT_THROW(report::parse_format("xml"), DomainError);
}

TEST(Cli, FracintExample) {
  const auto r = run_cli({"fracint", "--fn", "sqrt", "--a", "1", "--b", "4"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "fn,a,b,alpha,beta,breakpoints,frac,floor,plain,quadrature");
  EXPECT_EQ(ls[1].rfind("sqrt,1,4,1,2,1,1.66666666", 0), 0u);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run_cli({"zeta", "--n", "2", "--c", "100", "--terms", "1000", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["subcommand"], "zeta");
  EXPECT_EQ(j["schema"], "fracgap.zeta.v1");
  EXPECT_FALSE(j["rows"].empty());
}

TEST(Cli, GapsExample) {
  const auto r = run_cli({"gaps", "--limit", "100"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 25u);
  EXPECT_EQ(ls[1].rfind("1,2,3,1", 0), 0u);
}

TEST(Cli, WritesToFileAndCache) {
  const auto dir = std::filesystem::temp_directory_path() / "fracgap_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "gaps.csv";
  const auto cache = dir / "primes.bin";
  std::filesystem::remove(cache);
  auto r = run_cli({"gaps", "--limit", "1000", "--out", out.string(), "--cache", cache.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(cache));
  const auto first = std::filesystem::file_size(out);
  r = run_cli({"gaps", "--limit", "1000", "--out", out.string(), "--cache", cache.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(std::filesystem::file_size(out), first);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gaps", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fracint", "--fn", "sqrt", "--a", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fracint", "--fn", "nope", "--a", "1", "--b", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fracint", "--fn", "sqrt", "--a", "4", "--b", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gaps", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gaps", "--limit", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
  const auto r = run_cli({"stats", "bogus", "--limit", "100"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::vector<std::string>> cmds = {
      {"sieve", "--limit", "200000"},
      {"residuals", "--limit", "200000", "--fn", "log"},
      {"stats", "cramer", "--limit", "200000"},
      {"comparison", "--limit", "200000"},
      {"theta", "--theta", "0.1", "--limit", "200000"},
      {"assumptions", "--limit", "200000", "--checkpoints", "10,100,1000"},
      {"rst", "--limit", "200000", "--fn", "sqrt"},
  };
  for (auto cmd : cmds) {
    auto one = cmd;
    one.insert(one.end(), {"--threads", "1"});
    auto many = cmd;
    many.insert(many.end(), {"--threads", "8"});
    const auto a = run_cli(one);
    const auto b = run_cli(many);
    ASSERT_EQ(a.code, cli::kExitOk) << cmd[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

}  // namespace
}  // namespace fracgap
