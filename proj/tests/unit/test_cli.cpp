#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
CliResult cli(const std::string& args) {
  std::string cmd = std::string(AFFHECKE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json json_of(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ReduceWord) {
  CliResult r = cli("reduce --type A1 --word \"0 1 0\"");
  ASSERT_EQ(r.status, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["length"], 3);
  // s0 s1 s0 = s t_{2 alpha}.
  EXPECT_EQ(j["element"]["translation"], nlohmann::json::array({2}));
  EXPECT_EQ(j["element"]["finite_word"], nlohmann::json::array({1}));
  EXPECT_EQ(j["reduced_word"].size(), 3u);
}

TEST(Cli, ReduceIdentity) {
  CliResult r = cli("reduce --type A1 --word \"\"");
  ASSERT_EQ(r.status, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["length"], 0);
  EXPECT_EQ(j["stab_length"], 0);
  EXPECT_EQ(j["normal_form"], "e");
}

TEST(Cli, ReduceJsonElement) {
  CliResult r = cli("reduce --type A2 --elt '{\"finite_word\":[],\"translation\":[-1,-1]}'");
  ASSERT_EQ(r.status, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["length"], 4);
  EXPECT_EQ(j["stab_length"], 4);
}

TEST(Cli, Block) {
  auto j = json_of(cli("block --type A1 -d 3 --weight \"0\""));
  EXPECT_EQ(j["lambda0"], nlohmann::json::array({-1}));
  EXPECT_EQ(j["x_str"], "s1");
  EXPECT_TRUE(j["J"].empty());
  j = json_of(cli("block --type A1 -d 3 --weight \"-2\""));
  EXPECT_EQ(j["J"], nlohmann::json::array({0}));
}

TEST(Cli, Orders) {
  CliResult r = cli("orders --type A1 --x \"t(1)\" --y \"e\"");
  ASSERT_EQ(r.status, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["bruhat"], false);
  EXPECT_EQ(j["stab"], true);
}

TEST(Cli, VerifyEquivalence) {
  CliResult r = cli("verify equivalence --type A1 -d 3 --band 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["verdict"], "PASS");
  r = cli("verify equivalence --type A2 -d 5 --band 3 --J auto --weight \"0,0\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["verdict"], "PASS");
  r = cli("verify equivalence --fault-inject wall-shift");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json_of(r)["verdict"], "FAIL");
  EXPECT_FALSE(json_of(r)["witnesses"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("reduce --type A1 --word \"0 7\"").status, 2);
  EXPECT_EQ(cli("reduce --type E9 --word \"\"").status, 2);
  EXPECT_EQ(cli("block --type A2 -d 5 --weight \"1\"").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("verify equivalence --type A1 -d 3 --weight 0 --J 0").status, 2);
  EXPECT_EQ(cli("orders --type A2 --x \"t(-40,30)\" --y \"t(35,-50)\" --n-cap 1").status, 3);
}

TEST(Cli, Deterministic) {
  const std::string args = "quiver --type A2 -d 5 --weight \"0,0\" --band 3 --box 1 --side hecke";
  CliResult a = cli(args), b = cli(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  CliResult c = cli("quiver --type A1 -d 3 --band 3 --side quantum --format csv");
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "src,dst,walls");
}

TEST(Cli, ConfigFileAndOut) {
  const std::string cfg = ::testing::TempDir() + "affhecke_cfg.json";
  const std::string out = ::testing::TempDir() + "affhecke_out.json";
  std::ofstream(cfg) << R"({"type": "A2", "d": 5, "weight": "0,1", "band": 3, "box": 1})";
  CliResult r = cli("--config " + cfg + " --out " + out + " verify equivalence");
  EXPECT_EQ(r.status, 0);
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["type"], "A2");
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["block"]["J"], nlohmann::json::array({2}));
}

TEST(Cli, Suites) {
  CliResult r = cli("verify suite --suite rootdata");
  EXPECT_EQ(r.status, 0);
  auto j = json_of(r);
  ASSERT_EQ(j["suites"].size(), 1u);
  EXPECT_EQ(j["suites"][0]["passed"], true);
}
