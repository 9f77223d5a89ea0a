#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PHI4_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("cumulants --order 99").code, 2);
  EXPECT_EQ(run("valuation pi --graph nosuchgraph --cutoff 1").code, 2);
  EXPECT_EQ(run("--json --csv cumulants --order 2").code, 2);
  EXPECT_EQ(run("hopf commutativity --n 3").code, 0);
}

TEST(Cli, DeterministicJsonEnvelope) {
  const auto a = run("--deterministic cumulants --order 3");
  const auto b = run("--deterministic cumulants --order 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc.at("schema"), "phi4-hopf/1");
  EXPECT_FALSE(doc.contains("timestamp"));
  EXPECT_EQ(doc.at("config").at("command"), "cumulants");
}

TEST(Cli, ValuationPiMatchesBetweenMethods) {
  const auto m = nlohmann::json::parse(run("--deterministic valuation pi --graph FGIV --cutoff 2 --method momentum").out);
  const auto k = nlohmann::json::parse(run("--deterministic valuation pi --graph FGIV --cutoff 2 --method kernel").out);
  const double a = m.at("result").at("value");
  const double b = k.at("result").at("value");
  EXPECT_NEAR(a, b, 1e-10 * a);
}

TEST(Cli, CountertermCsv) {
  const auto r = run("valuation counterterms --n-max 3 --csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "N,C1,C2,C3,C4");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, BorelSokalReturnsVerdict) {
  const auto r = run("borel sokal --n-max 8 --eps 0.1,0.2 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("result").at("pass").get<bool>());
}

TEST(Cli, McSeedIsReproducible) {
  const auto a = run("--deterministic --seed 9 valuation mc --cutoff 1 --samples 300");
  const auto b = run("--deterministic --seed 9 valuation mc --cutoff 1 --samples 300 --threads 2");
  ASSERT_EQ(a.code, 0);
  const auto ja = nlohmann::json::parse(a.out).at("result").at("moments");
  const auto jb = nlohmann::json::parse(b.out).at("result").at("moments");
  EXPECT_EQ(ja, jb);
}
