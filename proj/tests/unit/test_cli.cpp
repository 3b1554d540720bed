#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epwcli/cli.hpp"

namespace {

using namespace epw::cli;
using Json = nlohmann::json;

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify-identities", "--samples", "many"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify-identities", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify-identities", "--samples", "-1"}).code, kUsageError);
  EXPECT_EQ(invoke({"strata", "--degree-bound", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"no-k3", "--out", "/nonexistent-dir/x.txt"}).code, kUsageError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, VerifyIdentities) {
  Captured c = invoke({"verify-identities", "--samples", "50"});
  ASSERT_EQ(c.code, kOk) << c.err;
  Json j = Json::parse(c.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const auto& s : j["suites"]) {
    EXPECT_EQ(s["failures"], 0);
    EXPECT_GT(s["checked"].get<long>(), 0);
  }
}

TEST(Cli, ZeroSamplesIsEmptyAndPasses) {
  Captured c = invoke({"verify-identities", "--samples", "0"});
  ASSERT_EQ(c.code, kOk);
  Json j = Json::parse(c.out);
  for (const auto& s : j["suites"]) EXPECT_EQ(s["checked"], 0);
}

TEST(Cli, InjectedFaultFails) {
  Captured c = invoke({"verify-identities", "--samples", "10", "--inject-fault"});
  EXPECT_EQ(c.code, kVerificationFailure);
  Json j = Json::parse(c.out);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(Cli, VerifyIdentitiesCsv) {
  Captured c = invoke({"verify-identities", "--samples", "5", "--format", "csv"});
  ASSERT_EQ(c.code, kOk);
  EXPECT_EQ(c.out.rfind("suite,checked,failures", 0), 0u) << c.out;
}

TEST(Cli, LatticeTable) {
  Captured c = invoke({"lattice-table", "--bound", "12"});
  ASSERT_EQ(c.code, kOk) << c.err;
  std::istringstream in(c.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "e,nonempty,div,square,class,witness");
  std::vector<std::string> rows;
  for (int i = 0; i < 12 && std::getline(in, line); ++i) rows.push_back(line);
  ASSERT_EQ(rows.size(), 12u);
  for (long e : {3, 7, 11}) EXPECT_EQ(rows[e - 1], std::to_string(e) + ",false,,,,");
  EXPECT_EQ(rows[3].rfind("4,true,1,-2,", 0), 0u);
  EXPECT_EQ(rows[5].rfind("6,true,2,-12,\"(1,1)\",", 0), 0u);
  EXPECT_NE(c.out.find("Gamma"), std::string::npos);
}

TEST(Cli, NoK3Transcript) {
  Captured c = invoke({"no-k3"});
  ASSERT_EQ(c.code, kOk) << c.err;
  EXPECT_NE(c.out.find("50"), std::string::npos);
  Captured small = invoke({"no-k3", "--bound", "1", "--format", "json"});
  ASSERT_EQ(small.code, kOk);
  Json j = Json::parse(small.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["divisibility_one_witnesses"].empty());
}

TEST(Cli, StrataWithoutCertificateRecordsInconclusive) {
  Captured c = invoke({"strata", "--samples", "20", "--degree-bound", "4"});
  ASSERT_EQ(c.code, kOk) << c.err;
  Json j = Json::parse(c.out);
  EXPECT_FALSE(j["lagrangians"][0]["certified"].get<bool>());
}

TEST(Cli, OutputFileMatchesStdout) {
  auto path = std::filesystem::temp_directory_path() / "epwcube_cli_test.csv";
  Captured to_file = invoke({"lattice-table", "--bound", "8", "--out", path.string()});
  ASSERT_EQ(to_file.code, kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), invoke({"lattice-table", "--bound", "8"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-identities", "--samples", "30", "--seed", "9"},
           {"lattice-table", "--bound", "10"},
           {"no-k3", "--bound", "5"},
           {"strata", "--samples", "30", "--degree-bound", "4"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
