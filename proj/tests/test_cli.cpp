#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = phaselab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(PHASELAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SelftestPasses) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.doc()["pass"].get<bool>());
  EXPECT_EQ(r.doc()["schema"], "phaselab/1");
}

TEST(Cli, SignalConjectureWorkedCase) {
  const auto r = run({"conjecture", "--mode", "signal", "--S", "0,1,2,5", "--N", "8"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json d = r.doc();
  EXPECT_EQ(d["dim"], 4);
  EXPECT_EQ(d["degree"], 4);
  EXPECT_EQ(d["expected_degree"], 4);
  EXPECT_TRUE(d["pass"].get<bool>());
}

TEST(Cli, ComplementWitness) {
  const auto r = run({"complement", "--matrix", data("example5x3.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.doc()["pass"].get<bool>());
  EXPECT_EQ(r.doc()["witness"], json::parse("[1,2,3]"));
}

TEST(Cli, MeasureIntensity) {
  const std::string path = ::testing::TempDir() + "cli_signal.json";
  std::ofstream(path) << "[4.5, 9, 0.5, 1]";
  const auto r = run({"measure", "--model", "apac", "--input", path});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("102.5"), std::string::npos);
}

TEST(Cli, UsageAndInputErrors) {
  const auto missing = run({"complement", "--matrix", "/nonexistent.csv"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.doc()["error"]["kind"], "input");
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"diffset", "--S", "0,9", "--N", "8"}).code, 2);
  EXPECT_EQ(run({"conjecture", "--mode", "support", "--N", "8"}).code, 2);
}

TEST(Cli, DeterministicAndEchoesSeed) {
  const std::vector<std::string> args = {"--seed", "17", "census", "--N", "8", "--K", "4"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.doc()["seed"], 17);
}

TEST(Cli, CensusCsv) {
  const auto r = run({"--format", "csv", "census", "--N", "8", "--K", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# schema=phaselab/1 seed=0\nmultiset,num_classes,classes\n", 0), 0u) << r.out;
}

TEST(Cli, OutWritesFile) {
  const std::string path = ::testing::TempDir() + "cli_out.json";
  const auto r = run({"--out", path, "diffset", "--S", "0,1,2,5", "--N", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json d = json::parse(in);
  EXPECT_EQ(d["schema"], "phaselab/1");
}

TEST(Cli, ExpiredBudgetIsPartial) {
  ::setenv("PHASELAB_BUDGET_MS", "0", 1);
  const auto r = run({"conjecture", "--mode", "support", "--N", "8", "--K", "4"});
  ::unsetenv("PHASELAB_BUDGET_MS");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.doc()["partial"].get<bool>());
}
