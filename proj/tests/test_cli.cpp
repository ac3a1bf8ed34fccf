#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cubicmcm/cli.hpp"

using namespace cubicmcm;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "betti"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"betti", "1"}).code, 2);
  EXPECT_EQ(run({"betti", "1", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"betti", "1", "0"}).code, 2);                         // variant needed on d = 0
  EXPECT_EQ(run({"betti", "2", "1", "--variant", "atiyah"}).code, 2);  // not on a ray
  EXPECT_EQ(run({"betti", "1", "0", "--variant", "bogus"}).code, 2);
  EXPECT_EQ(run({"reduce", "1", "1", "--domain", "4"}).code, 2);
  EXPECT_EQ(run({"betti", "1", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"mf", "koszul", "--field", "fp:9"}).code, 2);
  EXPECT_EQ(run({"mf", "verify", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, DomainErrors) {
  const CliRun r = run({"betti", "0", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "ZeroCharge"));
  EXPECT_EQ(run({"mf", "koszul", "--psi", "1"}).code, 1);
  EXPECT_EQ(run({"mf", "moore", "--field", "fp:7", "--psi", "3"}).code, 1);
  EXPECT_EQ(run({"mf", "moore", "--point", "1,1,1"}).code, 1);
}

TEST(Cli, Betti) {
  const CliRun r = run({"betti", "2", "3", "--variant", "special"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "S_1"));
  const CliRun g = run({"betti", "0", "1"});
  EXPECT_EQ(g.code, 0);
  EXPECT_TRUE(contains(g.out, "G(1,1)"));
  const CliRun neg = run({"betti", "-2", "-3", "--variant", "atiyah"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_EQ(run({"betti", "-2", "-3", "--variant", "special"}).code, 1);
  const CliRun j = run({"betti", "3", "5", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const json parsed = json::parse(j.out);
  EXPECT_EQ(parsed["charge"], json({3, 5}));
  EXPECT_TRUE(contains(run({"betti", "3", "5", "--format", "tex"}).out, "\\begin{array}"));
}

TEST(Cli, Reduce) {
  EXPECT_TRUE(contains(run({"reduce", "0", "1"}).out, "k=2, charge (1,1)"));
  EXPECT_TRUE(contains(run({"reduce", "2", "3", "--domain", "6"}).out, "k=1, charge (1,0)"));
  const json j = json::parse(run({"reduce", "-1", "0", "--domain", "6", "--format", "json"}).out);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["charge"], json({1, 0}));
}

TEST(Cli, InvariantsHilbertSyzygy) {
  const CliRun inv = run({"invariants", "1", "0", "--variant", "atiyah"});
  EXPECT_EQ(inv.code, 0);
  EXPECT_TRUE(contains(inv.out, "P(t) = 1 + 4*t + t^2"));
  EXPECT_TRUE(contains(inv.out, "e = 6"));
  EXPECT_TRUE(contains(inv.out, "mu = 4"));
  const CliRun h = run({"hilbert", "2", "1", "--terms", "2", "--format", "json"});
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(json::parse(h.out)["dimensions"], json({{0, 1}, {1, 7}, {2, 13}}));
  const CliRun s = run({"syzygy", "1", "0", "--variant", "atiyah"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(contains(s.out, "syz F_1 = S_1(-2)"));
  const CliRun res = run({"resolution", "1", "0", "--variant", "atiyah", "--steps", "1"});
  EXPECT_EQ(res.code, 0);
  EXPECT_TRUE(contains(res.out, "R + R(-1)^3"));
}

TEST(Cli, MatrixFactorizationPipeline) {
  const CliRun k = run({"mf", "koszul", "--format", "json"});
  ASSERT_EQ(k.code, 0);
  const CliRun v = run({"mf", "verify", "-"}, k.out);
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, "result: ok"));
  EXPECT_TRUE(contains(v.out, "rows (0,0,0,1), cols (1,2,2,2)"));
  const CliRun b = run({"mf", "betti", "-", "--side", "B", "--format", "json"}, k.out);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(b.out)["rows"], json({{0, 1, 0}, {1, 3, 3}, {2, 0, 1}}));

  const CliRun m = run({"mf", "moore", "--psi", "2", "--format", "json"});
  ASSERT_EQ(m.code, 0);
  const CliRun mb = run({"mf", "betti", "-", "--side", "A", "--format", "json"}, m.out);
  EXPECT_EQ(json::parse(mb.out)["rows"], json({{0, 3, 3}, {1, 0, 0}, {2, 0, 0}}));

  const CliRun sky = run({"mf", "skyscraper", "--point", "0,-1,1"});
  EXPECT_EQ(sky.code, 0);
  EXPECT_TRUE(contains(sky.out, "result: ok"));
  EXPECT_EQ(run({"mf", "skyscraper", "--field", "fp:11", "--psi", "3", "--explicit"}).code, 0);
  EXPECT_EQ(run({"mf", "skyscraper", "--point", "0,-1,1", "--explicit"}).code, 1);
}

TEST(Cli, VerifyReportsFailure) {
  json doc = json::parse(run({"mf", "koszul", "--format", "json"}).out);
  doc["B"][0][0] = json::array({{{"coefficient", "1/1"}, {"exponents", {2, 0, 0}}}, {{"coefficient", "1/1"}, {"exponents", {0, 0, 2}}}});
  const CliRun v = run({"mf", "verify", "-"}, doc.dump());
  EXPECT_EQ(v.code, 1);
  EXPECT_TRUE(contains(v.out, "result: FAILED"));
  EXPECT_TRUE(contains(v.err, "VerificationFailed"));
  EXPECT_EQ(run({"mf", "betti", "-"}, doc.dump()).code, 1);
  EXPECT_EQ(run({"mf", "verify", "-"}, "{ not json").code, 1);
}

TEST(Cli, FileArgument) {
  const auto path = std::filesystem::temp_directory_path() / "cubicmcm_cli_test.json";
  {
    std::ofstream f(path);
    f << run({"mf", "koszul", "--field", "fp:7", "--psi", "3", "--format", "json"}).out;
  }
  EXPECT_EQ(run({"mf", "verify", path.string()}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, Points) {
  const CliRun p = run({"points", "--field", "fp:7", "--psi", "3"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(std::count(p.out.begin(), p.out.end(), '\n'), 9);
  EXPECT_EQ(run({"points", "--field", "fp:7", "--psi", "3", "--nonzero"}).out, "");
  EXPECT_TRUE(contains(run({"points", "--psi", "2", "--nonzero", "--height", "3"}).out, "[1:2:3]"));
  EXPECT_EQ(run({"points", "--field", "fp:1000003"}).code, 1);
}
