#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "skw/cli.hpp"

using namespace skw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "skw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Report, VerdictIgnoresInfoRecords) {
  Report rep("demo");
  rep.add({"ok", 1, {}, 1, Provenance::derived, 1, true, false, "", 0});
  rep.add({"note", 1, {}, nullptr, Provenance::none, 2, false, true, "", 0});
  EXPECT_TRUE(rep.pass());
  EXPECT_TRUE(rep.criterion_pass(1));
  EXPECT_FALSE(rep.criterion_pass(2));
  rep.add({"bad", 2, {}, 1, Provenance::published, 0, false, false, "", 0});
  EXPECT_FALSE(rep.pass());
  auto j = rep.to_json();
  EXPECT_EQ(j["summary"]["passed"], 1);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["summary"]["info"], 1);
  EXPECT_EQ(j["checks"][2]["provenance"], "published");
  EXPECT_FALSE(j.contains("total_seconds"));
}

TEST(Report, CsvQuotesFields) {
  Report rep("demo");
  rep.add({"a,b", 0, {}, Json::array({1, 2}), Provenance::trivial, Json::array({1, 2}), true, false, "", 0});
  auto csv = rep.to_csv();
  EXPECT_NE(csv.find("\"a,b\",0,check,trivial,\"[1,2]\",\"[1,2]\",true"), std::string::npos);
}

TEST(Cli, HilbertPositionalPresentation) {
  auto r = run({"hilbert", "builtin:s111", "--max-degree", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["dims"], Json::parse("[1,3,6,12,24,48]"));
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run({"hilbert", "--presentation", "builtin:s1bc:w,w", "--max-degree", "6"});
  auto b = run({"hilbert", "--presentation", "builtin:s1bc:w,w", "--max-degree", "6"});
  EXPECT_EQ(a.out, b.out);
  auto c = run({"ppring", "--max-degree", "5", "--oracle-max", "4"});
  auto d = run({"ppring", "--max-degree", "5", "--oracle-max", "4"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, TimingIsOptIn) {
  auto j = json_of(run({"hilbert", "--max-degree", "3", "--timing"}));
  EXPECT_TRUE(j.contains("total_seconds"));
  EXPECT_TRUE(j["checks"][0].contains("seconds"));
}

TEST(Cli, CsvFormat) {
  auto r = run({"hilbert", "--max-degree", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("name,criterion,kind,provenance,expected,computed,pass", 0), 0u);
}

TEST(Cli, PresentationFileRoundTrip) {
  auto path = temp_file("skw_s111.txt", "generators: x y z\n1*y.z + 1*z.y + 1*x.x\n1*z.x + 1*x.z + 1*y.y\n1*x.y + 1*y.x + 1*z.z\n");
  auto a = json_of(run({"hilbert", "--presentation", path, "--max-degree", "5"}));
  auto b = json_of(run({"hilbert", "--presentation", "builtin:s111", "--max-degree", "5"}));
  EXPECT_EQ(a["dims"], b["dims"]);
  std::filesystem::remove(path);
}

TEST(Cli, InputErrorsExitThree) {
  EXPECT_EQ(run({"hilbert", "--presentation", "/nonexistent/skw.txt"}).code, cli::exit_input);
  auto nq = temp_file("skw_nq.txt", "generators: x y z\n1*x\n");
  auto r = run({"hilbert", "--presentation", nq});
  EXPECT_EQ(r.code, cli::exit_input);
  EXPECT_NE(r.err.find("non-quadratic"), std::string::npos);
  auto dup = temp_file("skw_dup.txt", "generators: x y z\n1*y.z + 1*z.y\n1*y.z + 1*z.y\n");
  r = run({"hilbert", "--presentation", dup});
  EXPECT_EQ(r.code, cli::exit_input);
  EXPECT_NE(r.err.find("dependent-relations"), std::string::npos);
  auto syn = temp_file("skw_syn.txt", "generators: x y z\n1*y.z + $\n");
  r = run({"hilbert", "--presentation", syn});
  EXPECT_NE(r.err.find("line 2, column 9"), std::string::npos);
  for (const auto& p : {nq, dup, syn}) std::filesystem::remove(p);
  EXPECT_EQ(run({"hilbert", "--field", "fp:5"}).code, cli::exit_input);
  EXPECT_EQ(run({"ppring", "--field", "q"}).code, cli::exit_input);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"hilbert", "--bogus"}).code, cli::exit_usage);
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"hilbert", "--format", "xml"}).code, cli::exit_usage);
}

TEST(Cli, BoundErrorsExitFour) {
  EXPECT_EQ(run({"hilbert", "--max-degree", "0"}).code, cli::exit_bound);
  EXPECT_EQ(run({"ppring", "--max-degree", "3", "--oracle-max", "0"}).code, cli::exit_bound);
  EXPECT_EQ(run({"ppring", "--max-degree", "3", "--oracle-max", "4"}).code, cli::exit_bound);
  EXPECT_EQ(run({"ptscheme", "--field", "fp:7", "--d", "6", "--mode", "enumerate"}).code, cli::exit_bound);
}

TEST(Cli, PpringMinimalOracle) {
  auto r = run({"ppring", "--max-degree", "3", "--oracle-max", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["oracle_dims"], Json::parse("[1,3]"));
  EXPECT_EQ(j["dims"], Json::parse("[1,3,6,12]"));
}

TEST(Cli, PpringSchemaKeys) {
  auto j = json_of(run({"ppring", "--max-degree", "5", "--oracle-max", "5"}));
  for (const char* k : {"dims", "oracle_dims", "glued_dims", "generation", "kernel_dims", "series_match"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["dims"], Json::parse("[1,3,6,12,18,30]"));
  EXPECT_EQ(j["kernel_dims"], Json::parse("[0,0,0,0,6,18]"));
}

TEST(Cli, TwistByPreservingAndNonPreservingMatrices) {
  auto r = run({"twist", "--auto", "sigma", "--max-degree", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["identified"], "S(1,w,w^2)");
  r = run({"twist", "--auto", "matrix:1,1,0,0,1,0,0,0,1", "--max-degree", "4"});
  EXPECT_EQ(r.code, cli::exit_check_failed);
  EXPECT_EQ(run({"twist", "--auto", "matrix:1,0,0,0,0,0,0,0,1"}).code, cli::exit_input);
}

TEST(Cli, CertifyNormal) {
  auto r = run({"certify-normal"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["normal"].get<bool>());
  EXPECT_EQ(run({"certify-normal", "--presentation", "builtin:s111", "--element", "x"}).code, cli::exit_check_failed);
  EXPECT_EQ(run({"certify-normal", "--presentation", "builtin:s111", "--element", "x*"}).code, cli::exit_input);
}

TEST(Cli, PtschemeCompare) {
  auto r = run({"ptscheme", "--field", "fp:7", "--d", "2", "--mode", "compare"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"ptscheme", "--d", "2", "--mode", "enumerate"}).code, cli::exit_input);
}

TEST(Cli, OutFileWritesSummaryLine) {
  auto path = (std::filesystem::temp_directory_path() / "skw_report.json").string();
  auto r = run({"hilbert", "--max-degree", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS hilbert", 0), 0u);
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["dims"], Json::parse("[1,3,6,12]"));
  std::filesystem::remove(path);
}

TEST(Cli, VersionFlag) {
  auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(kVersion), std::string::npos);
}
