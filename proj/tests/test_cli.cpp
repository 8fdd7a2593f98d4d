#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "pivotkit/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = pivotkit::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("pivotkit_cli_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, GenFundgraphPipeline) {
  const auto gen = run({"gen", "ktt", "5"});
  ASSERT_EQ(gen.code, pivotkit::kExitOk) << gen.err;
  const auto fund = run({"fundgraph", "-"}, gen.out);
  ASSERT_EQ(fund.code, pivotkit::kExitOk) << fund.err;
  EXPECT_EQ(fund.out.substr(0, fund.out.find('\n')), "bigraph 4 4");
  const auto stats = run({"stats", "-"}, fund.out);
  EXPECT_NE(stats.out.find("edges=16"), std::string::npos) << stats.out;
}

TEST(Cli, RandomGenerationIsDeterministic) {
  const auto a = run({"gen", "random", "9", "4", "--seed", "5"});
  const auto b = run({"gen", "random", "9", "4", "--seed", "5"});
  const auto c = run({"gen", "random", "9", "4", "--seed", "6"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CutrankAndPivot) {
  const std::string c4 = "graph 4\n0 1\n0 3\n1 2\n2 3\n";
  const auto cr = run({"cutrank", "-", "--set", "0,1"}, c4);
  EXPECT_EQ(cr.code, 0);
  EXPECT_EQ(cr.out, "2\n");
  const auto piv = run({"pivot", "-", "0", "1"}, c4);
  ASSERT_EQ(piv.code, 0) << piv.err;
  const auto back = run({"pivot", "-", "0", "1"}, piv.out);
  EXPECT_EQ(back.out, c4);
  EXPECT_EQ(run({"pivot", "-", "0", "2"}, c4).code, pivotkit::kExitUsage);
}

TEST(Cli, RankConnectivity) {
  const std::string k33 = "bigraph 3 3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n";
  const auto yes = run({"rankconn", "-", "2"}, k33);
  EXPECT_EQ(yes.out, "2-rank-connected\n");
  const auto no = run({"rankconn", "-", "4"}, k33);
  EXPECT_EQ(no.out.rfind("separation order 2 cutrank 1", 0), 0u) << no.out;
}

TEST(Cli, Matroid) {
  const auto gen = run({"gen", "random", "5", "3", "--seed", "2"});
  const auto graphic = run({"matroid", "graphic", "-"}, gen.out);
  ASSERT_EQ(graphic.code, 0) << graphic.err;
  const auto circuits = run({"matroid", "circuits", "-"}, graphic.out);
  EXPECT_EQ(circuits.code, 0);
  EXPECT_EQ(circuits.out.rfind("circuits ", 0), 0u);
  EXPECT_EQ(run({"matroid", "lambda", "-", "--set", "99"}, graphic.out).code, pivotkit::kExitUsage);
}

TEST(Cli, SplitTree) {
  std::string path = "graph 11\n";
  for (int i = 0; i < 10; ++i) path += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const auto ok = run({"splittree", "-", "2"}, path);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("split edge 7 8", 0), 0u) << ok.out;
  EXPECT_EQ(run({"splittree", "-", "3"}, path).code, pivotkit::kExitUsage);
}

TEST(Cli, PivotMinor) {
  TempDir dir;
  const auto h = dir.write("h.txt", "graph 2\n0 1\n");
  const auto g = dir.write("g.txt", "graph 3\n0 1\n1 2\n");
  const auto yes = run({"pivotminor", h, g});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("yes", 0), 0u);
  EXPECT_EQ(run({"pivotminor", h, g, "--refute"}).code, pivotkit::kExitViolation);
  const auto tiny = run({"pivotminor", g, dir.write("k.txt", "graph 4\n0 1\n1 2\n2 3\n"), "--budget", "1"});
  EXPECT_TRUE(tiny.code == pivotkit::kExitBudget || tiny.code == 0) << tiny.out;
}

TEST(Cli, CheckAndReplay) {
  TempDir dir;
  const std::vector<std::string> args{"check", "fun-lemma", "--source", "ktt:5", "--s", "2", "--t", "5",
                                      "--bound-offset", "-1", "--trials", "1", "--seed", "3"};
  const auto fail = run(args);
  EXPECT_EQ(fail.code, pivotkit::kExitViolation);
  EXPECT_EQ(fail.out.rfind("FAIL", 0), 0u);
  EXPECT_EQ(run(args).out, fail.out);
  const auto replay = run({"replay", dir.write("r.txt", fail.out)});
  EXPECT_EQ(replay.code, pivotkit::kExitViolation);

  const auto pass = run({"check", "pivot-matroid", "--trials", "5"});
  EXPECT_EQ(pass.code, pivotkit::kExitOk);
  EXPECT_EQ(run({"replay", "-"}, pass.out).code, pivotkit::kExitOk);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, pivotkit::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, pivotkit::kExitUsage);
  EXPECT_EQ(run({"check", "nope"}).code, pivotkit::kExitUsage);
  EXPECT_EQ(run({"check", "fun-lemma", "--max-vertices", "1000"}).code, pivotkit::kExitBudget);
  EXPECT_EQ(run({"fundgraph", "-"}, "garbage\n").code, pivotkit::kExitUsage);
  EXPECT_EQ(run({"fundgraph", "/nonexistent/file"}).code, pivotkit::kExitUsage);
}
