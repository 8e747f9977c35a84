// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ets/output.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ets_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of `ets args`, with stdout and stderr captured to files.
  int run(const std::string& args) {
    const std::string cmd = std::string(ETS_CLI_PATH) + " " + args + " >" + (dir_ / "stdout").string() + " 2>" +
                            (dir_ / "stderr").string();
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }
  std::string read(const std::string& name) const {
    std::ifstream f(dir_ / name, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ScanSucceeds) {
  ASSERT_EQ(run("scan --family ghz3-cond --inequality svetlichny3 --V 5 --d 0:10:50 --eta 0.1"), 0);
  std::istringstream is(read("stdout"));
  const auto rows = ets::read_csv(is);
  ASSERT_EQ(rows.size(), 50u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].value, rows[i - 1].value);
  // At eta = 0.1 the Erf argument at d = 10 is only about 1.4; the 4 sqrt(2)
  // plateau needs d of a few tens.
  const double closed = ets::functional_value(ets::Family::Ghz3Conditional, ets::InequalityName::Svetlichny3, 5.0,
                                              10.0, 0.1, {}, ets::Evaluator::ClosedForm)
                            .value;
  EXPECT_NEAR(rows.back().value, closed, 1e-9);
  ASSERT_EQ(run("scan --family ghz3-cond --inequality svetlichny3 --V 5 --d 60 --eta 0.1"), 0);
  std::istringstream far(read("stdout"));
  EXPECT_NEAR(ets::read_csv(far).front().value, 4.0 * std::sqrt(2.0), 1e-6);
}

TEST_F(Cli, TrivialSasaPoint) {
  ASSERT_EQ(run("scan --family cluster4-cond --inequality sasa --V 1 --d 0 --eta 1"), 0);
  std::istringstream is(read("stdout"));
  const auto rows = ets::read_csv(is);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].value, 0.0);
}

TEST_F(Cli, InvalidFlagsExitOne) {
  EXPECT_EQ(run("scan --family w3"), 1);
  EXPECT_NE(read("stderr").find("--inequality"), std::string::npos);
  EXPECT_EQ(run("scan --family nope --inequality sasa"), 1);
  EXPECT_EQ(run("scan --family w3 --inequality svetlichny3 --d 1:2"), 1);
  EXPECT_EQ(run("scan --family w3 --inequality svetlichny3 --format xml"), 1);
  EXPECT_EQ(run("scan --family w3 --inequality svetlichny3 --angles explicit"), 1);
  EXPECT_EQ(run("figure fig1"), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run(""), 1);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run("--help"), 0); }

TEST_F(Cli, FailedPointExitsTwo) {
  EXPECT_EQ(run("scan --family ghz3-cond --inequality svetlichny3 --V 1 --d 1,5000 --eta 1"), 2);
  EXPECT_NE(read("stdout").find(",nan,nan,"), std::string::npos);
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::string base = "scan --family w3 --inequality svetlichny3 --V 1,10 --d 0:60:13 --eta 0.5,1 ";
  ASSERT_EQ(run(base + "--out " + path("a.csv")), 0);
  ASSERT_EQ(run(base + "--out " + path("b.csv")), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  ASSERT_EQ(run(base + "--format json --out " + path("a.json")), 0);
  ASSERT_EQ(run(base + "--format json --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  ASSERT_EQ(run("figure fig4 --out " + path("f1.csv")), 0);
  ASSERT_EQ(run("figure fig4 --out " + path("f2.csv")), 0);
  EXPECT_EQ(read("f1.csv"), read("f2.csv"));
}

TEST_F(Cli, CsvAndJsonAgree) {
  const std::string base = "scan --family cluster4-kerr --inequality sasa --V 1,5 --d 0.5:6:7 --eta 0.7 ";
  ASSERT_EQ(run(base + "--out " + path("r.csv")), 0);
  ASSERT_EQ(run(base + "--format json --out " + path("r.json")), 0);
  std::ifstream c(path("r.csv")), j(path("r.json"));
  const auto a = ets::read_csv(c), b = ets::read_json(j);
  ASSERT_EQ(a.size(), 14u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].d, b[i].d);
    EXPECT_EQ(a[i].violated, b[i].violated);
  }
}

TEST_F(Cli, OptimizeReportsAngles) {
  ASSERT_EQ(run("optimize --family ghz3-kerr --inequality svetlichny3 --V 5 --d 11.18 --eta 1 --restarts 2"), 0);
  std::istringstream is(read("stdout"));
  const auto rows = ets::read_csv(is);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GT(rows[0].value, 4.0);
  EXPECT_NE(read("stderr").find("angles:"), std::string::npos);
}

TEST_F(Cli, ValidateMutationFailsBoundCheck) {
  EXPECT_EQ(run("validate --mutate"), 2);
  EXPECT_NE(read("stdout").find("[FAIL] 10 lr-bound-soundness"), std::string::npos);
}

}  // namespace
