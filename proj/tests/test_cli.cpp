#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

using splitblock::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with the given arguments; stderr is folded into `out` when
/// `merge_stderr` is set.
Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + SPLITBLOCK_CLI + "\" " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, ClassifySequence) {
  const auto j = run_json("classify --pi 5,4,4,3,2,1,1");
  EXPECT_EQ(j["ng1"], true);
  EXPECT_EQ(j["ng2"], true);
  EXPECT_EQ(j["unbalanced"], true);
  EXPECT_EQ(j["mark"], 4);
  EXPECT_EQ(j["n1"], 10);
  EXPECT_EQ(j["n2"], 10);

  const auto fig = run_json("classify --pi 6,5,2,2,2,1,1,1");
  EXPECT_EQ(fig["alpha"], json::array({6, 4}));
  EXPECT_EQ(fig["beta"], json::array({7, 3}));
  EXPECT_EQ(fig["graphic"], true);

  const auto bad = run_json("classify --pi 3,1");
  EXPECT_EQ(bad["graphic"], false);
  EXPECT_EQ(bad["split"], false);
}

TEST(Cli, ClassifyBlock) {
  const auto j = run_json("classify --block \"6,4|7,3\"");
  EXPECT_EQ(j["sequence"], "(6,5,2,2,2,1,1,1)");
  EXPECT_EQ(j["ng1"], false);
  EXPECT_EQ(j["ng2"], true);
  EXPECT_EQ(j["threshold_covered"], true);
  EXPECT_EQ(j["len_alpha"], 2);
  EXPECT_EQ(j["len_beta"], 2);
}

TEST(Cli, InvalidBlockNamesTheClause) {
  const auto r = run("classify --block \"4,3,2,1|7,3\"", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("clause (iii)"), std::string::npos) << r.out;
}

TEST(Cli, InvalidFlagsExitOne) {
  EXPECT_EQ(run("dis -n 0").code, 1);
  EXPECT_NE(run("dis -n 0", true).out.find("-n"), std::string::npos);
  EXPECT_EQ(run("dis").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  EXPECT_EQ(run("classify").code, 1);
  EXPECT_EQ(run("hasse --target nope -n 3").code, 1);
  EXPECT_EQ(run("meetjoin -n 10 --b1 \"5,3,2|5,3,2\" --b2 \"1|1\"").code, 1);
}

TEST(Cli, DisListsElements) {
  const auto one = run("dis -n 1");
  EXPECT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("(1)"), std::string::npos);
  const auto j = run_json("dis -n 10");
  EXPECT_EQ(j["size"], 10);
  EXPECT_EQ(j["covers"].size(), 10u);
  EXPECT_EQ(run_json("dis -n 10 -k 3")["size"], 4);
  EXPECT_EQ(run("--pretty dis -n 1").out, "(1)\n");
  EXPECT_EQ(run("dis -n 1 --pretty").out, "(1)\n");
}

TEST(Cli, SBlockWithLabels) {
  const auto j = run_json("sblock -n 10 --labels");
  EXPECT_EQ(j["size"], 45);
  EXPECT_EQ(j["covers"].size(), 76u);
  EXPECT_EQ(j["elements"][0]["amphora"], "A(10,1)");
}

TEST(Cli, MeetJoin) {
  const auto j = run_json("meetjoin -n 10 --b1 \"5,3,2|5,3,2\" --b2 \"6,4|6,4\"");
  EXPECT_EQ(j["meet"]["label"], "[5,3,2|6,4]");
  EXPECT_EQ(j["join"]["label"], "top");
  EXPECT_EQ(j["case"]["row"], "3b");
  EXPECT_EQ(j["case"]["meet"], "A(10,3,2)");
}

TEST(Cli, Amphoras) {
  const auto j = run_json("amphoras -n 10");
  EXPECT_EQ(j["nodes"].size(), 7u);
  EXPECT_EQ(j["covers"].size(), 6u);
  EXPECT_EQ(j["nodes"][2]["name"], "A(10,3)");
  EXPECT_EQ(j["nodes"][2]["bottom"], "[5,3,2|7,2,1]");
}

TEST(Cli, Ng3) {
  const auto j = run_json("ng3 -n 38 -k 5");
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j["covers"].size(), 6u);
  EXPECT_EQ(j["image_amphora"], "A(18,5)");
  EXPECT_EQ(j["image_covers"].size(), 6u);
}

TEST(Cli, HasseIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / ("splitblock_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const std::string target : {"dis -n 12", "sblock -n 10", "ng3 -n 38 -k 5"}) {
    const auto a = dir / "a.dot";
    const auto b = dir / "b.dot";
    ASSERT_EQ(run("hasse --target " + target + " --dot \"" + a.string() + "\"").code, 0) << target;
    ASSERT_EQ(run("hasse --target " + target + " --dot \"" + b.string() + "\"").code, 0) << target;
    const auto text = slurp(a);
    EXPECT_FALSE(text.empty());
    EXPECT_EQ(text, slurp(b)) << target;
    EXPECT_EQ(text, run("hasse --target " + target).out) << target;
  }
  const auto sblock = run("hasse --target sblock -n 10").out;
  EXPECT_NE(sblock.find("subgraph cluster_0"), std::string::npos);
  EXPECT_NE(sblock.find("shape=box"), std::string::npos);
  EXPECT_NE(sblock.find("style=dashed"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifySmall) {
  const auto r = run("verify --max-n 6 --graphs-max-v 4 --threads 1");
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_GT(j["suites"].size(), 5u);
}
