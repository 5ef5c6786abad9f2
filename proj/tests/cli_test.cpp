// Drives the built executable end to end through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Outcome {
  int exit_code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("hiernet-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
    for (const char* spec : {"hcn 2", "hcn 3", "hs 2", "hfq 2", "cube 3"}) {
      std::string name(spec);
      std::replace(name.begin(), name.end(), ' ', '_');
      ASSERT_EQ(run("gen " + std::string(spec) + " -o " + path(name + ".json")).exit_code, 0);
    }
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  // stdout only; stderr is discarded.
  static Outcome run(const std::string& args) {
    const std::string cmd = std::string(HIERNET_CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static void write(const std::string& name, const std::string& body) { std::ofstream(path(name)) << body; }

  static inline fs::path dir_;
};

TEST_F(Cli, GenJsonAndDot) {
  const Outcome json = run("gen hcn 2");
  ASSERT_EQ(json.exit_code, 0);
  const Json doc = Json::parse(json.out);
  EXPECT_EQ(doc["order"], 16);
  EXPECT_TRUE(doc.contains("hierarchy"));
  const Outcome dot = run("gen star 3 --format dot");
  ASSERT_EQ(dot.exit_code, 0);
  std::size_t nodes = 0;
  for (auto pos = dot.out.find("[label="); pos != std::string::npos; pos = dot.out.find("[label=", pos + 1)) ++nodes;
  EXPECT_EQ(nodes, 6u);
  EXPECT_EQ(run("gen cube 3 --format edges").out.rfind("# order 8\n", 0), 0u);
}

TEST_F(Cli, GenErrors) {
  write("bad.json", R"({"base":{"order":2,"edges":[[0,1]]},"cross":[[[0,0],[1,1]],[[0,0],[1,0]]]})");
  EXPECT_EQ(run("gen compose --spec " + path("bad.json")).exit_code, 2);
  EXPECT_EQ(run("gen hcn 8 --max-vertices 100").exit_code, 2);
  EXPECT_EQ(run("gen torus 2").exit_code, 2);
  EXPECT_EQ(run("gen hcn").exit_code, 2);
  EXPECT_EQ(run("gen hcn 2 --format svg").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST_F(Cli, BudgetFromEnvironment) {
  const std::string cmd = "HIERNET_MAX_VERTICES=10 " + std::string(HIERNET_CLI_PATH) + " gen hcn 2 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST_F(Cli, StreesAndVerify) {
  const Outcome r = run("strees " + path("hcn_3.json") + " 0 1 2 -o " + path("p.json"));
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream in(path("p.json"));
  const Json doc = Json::parse(in);
  EXPECT_EQ(doc["trees"].size(), 3u);
  EXPECT_EQ(doc["report"]["verdict"], "valid");
  EXPECT_EQ(doc["manifest"]["command"], "strees");
  EXPECT_EQ(run("verify " + path("hcn_3.json") + " " + path("p.json")).exit_code, 0);

  Json shared = doc;
  shared["trees"][1].push_back(shared["trees"][0][0]);
  write("shared.json", shared.dump());
  const Outcome bad = run("verify " + path("hcn_3.json") + " " + path("shared.json"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("shared-edge"), std::string::npos);

  Json outside = doc;
  outside["trees"][0].push_back(Json::array({0, 999}));
  write("outside.json", outside.dump());
  EXPECT_EQ(run("verify " + path("hcn_3.json") + " " + path("outside.json")).exit_code, 2);
}

TEST_F(Cli, StreesExitCodes) {
  EXPECT_EQ(run("strees " + path("hs_2.json") + " 0 1 2").exit_code, 3);
  EXPECT_EQ(run("strees " + path("hcn_3.json") + " 5 5 9").exit_code, 2);
  EXPECT_EQ(run("strees " + path("cube_3.json") + " 0 1 2").exit_code, 2);
  EXPECT_EQ(run("strees " + path("missing.json") + " 0 1 2").exit_code, 2);
  EXPECT_EQ(run("strees " + path("hcn_3.json") + " 0 1").exit_code, 2);
}

TEST_F(Cli, StreesAcceptsLabels) {
  const Outcome r = run("strees " + path("hcn_3.json") + " '<000,000>' '⟨010,101⟩' 40");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["targets"], Json({0, 21, 40}));
}

TEST_F(Cli, OracleValues) {
  const Outcome kappa = run("oracle " + path("hfq_2.json") + " kappa --expect 4");
  EXPECT_EQ(kappa.exit_code, 0);
  EXPECT_EQ(Json::parse(kappa.out)["value"], 4);
  EXPECT_EQ(run("oracle " + path("hcn_2.json") + " kappa3-exhaustive --expect 2").exit_code, 0);
  EXPECT_EQ(run("oracle " + path("hcn_2.json") + " kappa3-exhaustive --expect 3").exit_code, 1);
  const Outcome s = run("oracle " + path("hfq_2.json") + " kappaS 0 5 10");
  EXPECT_EQ(Json::parse(s.out)["value"], 3);
  EXPECT_EQ(run("oracle " + path("hcn_2.json") + " kappa7").exit_code, 2);
}

TEST_F(Cli, OracleSampleIsDeterministicAcrossJobs) {
  const std::string base = "oracle " + path("hcn_2.json") + " kappa3-sample 40 11";
  const Json a = Json::parse(run(base).out);
  const Json b = Json::parse(run(base + " --jobs 3").out);
  EXPECT_EQ(a["exhausted"], false);
  EXPECT_EQ(a["manifest"]["seed"], 11);
  EXPECT_EQ(a["manifest"]["result_digest"], b["manifest"]["result_digest"]);
  Json sa = a, sb = b;
  sa.erase("manifest");
  sb.erase("manifest");
  EXPECT_EQ(sa.dump(), sb.dump());
}

TEST_F(Cli, GenIsByteStable) {
  EXPECT_EQ(run("gen hfq 3").out, run("gen hfq 3").out);
  EXPECT_EQ(run("gen hs 3 --format dot").out, run("gen hs 3 --format dot").out);
}

TEST_F(Cli, VersionAndHelp) {
  EXPECT_EQ(run("--version").exit_code, 0);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace
