#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "fhyper/cli.hpp"
#include "fhyper/report.hpp"

namespace fs = std::filesystem;
using namespace fhyper;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    rows.push_back(cols);
  }
  return rows;
}

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fhyper_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    ::setenv("HQ_CACHE_DIR", dir_.c_str(), 1);
  }
  void TearDown() override {
    ::unsetenv("HQ_CACHE_DIR");
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

}  // namespace

TEST(Cli, HqKatzTable) {
  const auto r = run({"hq", "--p", "3", "--q", "1,1,1", "--field", "7", "--t", "all", "--format",
                      "csv"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"q", "t", "value", "provenance", "p_valuation"}));
  const std::vector<std::string> expected{"1", "-1", "2", "-4", "2", "-1"};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(rows[i + 1][0], "7");
    EXPECT_EQ(rows[i + 1][1], std::to_string(i + 1));
    EXPECT_EQ(rows[i + 1][2], expected[i]);
  }
}

TEST(Cli, HqGeneralRouting) {
  const auto over_q = run({"hq", "--alpha", "1/5", "--beta", "1", "--field", "11"});
  EXPECT_EQ(over_q.code, cli::kExitUsage);
  EXPECT_FALSE(over_q.err.empty());
  const auto general =
      run({"hq", "--alpha", "1/5", "--beta", "1", "--field", "11", "--general", "--t", "2"});
  EXPECT_EQ(general.code, cli::kExitOk) << general.err;
  const auto bad_field =
      run({"hq", "--alpha", "1/5", "--beta", "1", "--field", "13", "--general", "--t", "2"});
  EXPECT_EQ(bad_field.code, cli::kExitUsage);
}

TEST(Cli, HqJsonIsDeterministic) {
  const std::vector<std::string> args{"hq", "--params", "p=2,2 q=1,1,1,1", "--field", "5,7,9",
                                      "--format", "json", "--jobs", "3"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.size(), 4u + 6u + 8u);
}

TEST(Cli, VerifyMain) {
  const auto r = run({"verify", "main", "--p", "3", "--q", "1,2", "--field", "7,13", "--format",
                      "csv"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto reports = report_parse(r.out, ReportFormat::Csv);
  EXPECT_FALSE(reports.empty());
  EXPECT_TRUE(all_equal(reports));
  for (const auto& rep : reports) EXPECT_EQ(rep.elapsed_ms, 0.0);
}

TEST(Cli, CountReports) {
  const auto r = run({"count", "--what", "curve", "--curve", "legendre", "--field", "13", "--t",
                      "2", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto reports = report_parse(r.out, ReportFormat::Json);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].brute, Rat(8));
  const auto torus = run({"count", "--what", "torus", "--p", "3", "--q", "1,2", "--field", "7",
                          "--format", "csv"});
  EXPECT_EQ(torus.code, cli::kExitOk) << torus.err;
  EXPECT_EQ(report_parse(torus.out, ReportFormat::Csv).size(), 6u);
}

TEST(Cli, TablePrs) {
  const auto r = run({"table", "prs", "--r", "2", "--s", "3", "--field", "7", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].back(), "71");
  const auto cells = run({"table", "cells", "--r", "1", "--s", "1", "--format", "csv"});
  EXPECT_EQ(cells.code, cli::kExitOk);
  EXPECT_EQ(csv_rows(cells.out).size(), 3u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hq", "--p", "3", "--q", "1,1", "--field", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hq", "--p", "3", "--q", "1,1,1", "--field", "6"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hq", "--p", "3", "--q", "1,1,1", "--field", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hq", "--p", "3", "--q", "1,1,1", "--field", "7", "--format", "xml"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"table", "prs"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hq", "--p", "3", "--q", "1,1,1", "--field", "7", "--t", "0"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CacheDir, BuildListClear) {
  auto built = run({"cache", "build", "--field", "7,9"});
  ASSERT_EQ(built.code, cli::kExitOk) << built.err;
  EXPECT_TRUE(fs::exists(dir_ / "field_7.hqft"));
  EXPECT_TRUE(fs::exists(dir_ / "field_9.hqft"));
  const auto listed = run({"cache", "list"});
  EXPECT_EQ(listed.code, cli::kExitOk);
  EXPECT_NE(listed.out.find("field_9.hqft"), std::string::npos);
  const auto hq = run({"hq", "--p", "3", "--q", "1,2", "--field", "7", "--format", "csv"});
  EXPECT_EQ(hq.code, cli::kExitOk) << hq.err;
  const auto cleared = run({"cache", "clear"});
  EXPECT_EQ(cleared.code, cli::kExitOk);
  EXPECT_FALSE(fs::exists(dir_ / "field_7.hqft"));
  EXPECT_EQ(run({"cache", "list"}).out, "");
  const auto other = dir_ / "explicit";
  EXPECT_EQ(run({"cache", "build", "--field", "4", "--cache-dir", other.string()}).code,
            cli::kExitOk);
  EXPECT_TRUE(fs::exists(other / "field_4.hqft"));
  EXPECT_EQ(run({"cache", "build", "--field", "10"}).code, cli::kExitUsage);
}
