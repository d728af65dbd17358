#include "cli.hpp"

#include "transdim/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = transdim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TRANSDIM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, EvalJsonMatchesGolden) {
  CliRun r = run({"eval", "C(w)", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("eval_C_w.json"));
  transdim::BoundReport rep = transdim::report_from_json(r.out);
  EXPECT_TRUE(rep.tdhd.upper_strict);
  EXPECT_EQ(rep.tdhd.upper.to_string(), "w_1");
}

TEST(Cli, EvalHumanMatchesGolden) {
  CliRun r = run({"eval", "excise(S(w+3), I^5)", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("eval_excise.txt"));
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  EXPECT_EQ(run({"eval", "alex(S(w), C(w_1), ...)", "--json"}).out,
            run({"eval", "alex(S(w), C(w_1), ...)", "--json"}).out);
}

TEST(Cli, EmptyHasDimensionMinusOne) {
  CliRun r = run({"eval", "empty"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[-1, -1]"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorExitsTwoWithPosition) {
  CliRun r = run({"eval", "S(w+"});
  EXPECT_EQ(r.code, transdim::cli::kUsageError);
  EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"eval", "S(w)", "--bogus"}).code, 2);
  EXPECT_EQ(run({"eval", "--file", "/nonexistent/input.txt"}).code, 2);
  EXPECT_EQ(run({"eval", "S(w)", "--disable", "NoSuchRule"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "S(w_1) with {separable}"}).code, 2);
}

TEST(Cli, EvalFromFile) {
  const std::string path = testing::TempDir() + "/transdim_expr.txt";
  std::ofstream(path) << "aug(S(w+1))\n";
  CliRun r = run({"eval", "--file", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(transdim::report_from_json(r.out).d.to_string(), "[w + 1, w + 1]");
}

TEST(Cli, DisableWidens) {
  CliRun r = run({"eval", "cantor(1/2)", "--json", "--disable", "FatCantorFullHD"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(transdim::report_from_json(r.out).hd.kind, transdim::HDClass::Kind::Unknown);
}

TEST(Cli, TraceAndRules) {
  CliRun t = run({"trace", "cunion(S(w), I^4)"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("ClosedUnionMax"), std::string::npos);
  CliRun r = run({"rules"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("WeightCap\t"), std::string::npos);
}

TEST(Cli, CheckOrdinals) {
  CliRun r = run({"check-ordinals", "--cases", "200", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, MetricCheck) {
  CliRun ok = run({"metric", "check", "--space", "S:2", "--grid", "1/4"});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("max dist: 3/4"), std::string::npos) << ok.out;
  EXPECT_EQ(run({"metric", "check", "--space", "S:w", "--verbatim"}).code, 1);
  CliRun big = run({"metric", "check", "--space", "S:2", "--grid", "1/32"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("refused"), std::string::npos) << big.err;
  EXPECT_EQ(run({"metric", "check", "--space", "S:w_1"}).code, 2);
  EXPECT_EQ(run({"metric", "check", "--space", "S:w", "--grid", "2/3"}).code, 2);
}

TEST(Cli, MetricPhiAndBoxdim) {
  CliRun p = run({"metric", "phi", "--depth", "8", "--report", "--json"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_NE(p.out.find("512/257"), std::string::npos) << p.out;
  CliRun b = run({"metric", "boxdim", "--set", "cantor:8", "--csv"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("1/1024,"), std::string::npos) << b.out;
}
