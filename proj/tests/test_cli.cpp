#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "kegel/subdist.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kegel_cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

TEST(Cli, Check) {
  Result r = run({"check", corpus("geometric.ppcf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "nat\n");
  EXPECT_EQ(run({"check", corpus("ill_typed.ppcf")}).code, 1);
  Result fpc = run({"check", corpus("nat.fpc")});
  EXPECT_EQ(fpc.code, 0);
  EXPECT_EQ(fpc.out, "mu X. (0 -> 0) + X\n");
  Result j = run({"check", corpus("walk.ppcf"), "--format", "json"});
  EXPECT_EQ(json::parse(j.out)["type"], "nat");
}

TEST(Cli, IoAndUsageErrors) {
  EXPECT_EQ(run({"check", corpus("missing.ppcf")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dist", corpus("coin.ppcf"), "--op-depth", "-3"}).code, 2);
  EXPECT_EQ(run({"dist", corpus("coin.ppcf"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"adequacy", corpus("coin.ppcf"), "--tol", "3/2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Dist) {
  Result r = run({"dist", "--depth", "1", corpus("coin.ppcf")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["outcomes"], (json{{"0", "1/3"}, {"1", "2/3"}}));
  EXPECT_EQ(j["residual"], "0");

  Result g = run({"dist", corpus("geometric.ppcf")});
  json gj = json::parse(g.out);
  EXPECT_EQ(gj["outcomes"]["0"], "1/2");
  EXPECT_EQ(gj["outcomes"]["5"], "1/64");
  kegel::Rational total = kegel::parse_rational(gj["residual"].get<std::string>());
  for (const auto& [k, v] : gj["outcomes"].items()) total += kegel::parse_rational(v.get<std::string>());
  EXPECT_EQ(total, 1);
}

TEST(Cli, DistRejectsNonNat) {
  std::string path = testing::TempDir() + "/identity.ppcf";
  {
    std::ofstream f(path);
    f << "\\x:nat. x\n";
  }
  Result r = run({"dist", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("nat -> nat"), std::string::npos);
}

TEST(Cli, Denote) {
  Result r = run({"denote", corpus("geometric.ppcf"), "--fix-iters", "40", "--support-cap", "40"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["discardedMass"], "0");
  EXPECT_EQ(j["weights"]["3"], "1/16");
  kegel::SubDist d = kegel::subdist_from_json(j);
  EXPECT_EQ(mass(d), 1 - kegel::pow2(-40));
}

TEST(Cli, Adequacy) {
  std::string path = testing::TempDir() + "/quarter.ppcf";
  {
    std::ofstream f(path);
    f << "coin(1/4)\n";
  }
  Result coin = run({"adequacy", path, "--numeral", "1"});
  ASSERT_EQ(coin.code, 0) << coin.err;
  EXPECT_EQ(json::parse(coin.out)["gap"], "0");

  Result div = run({"adequacy", corpus("divergent.ppcf"), "--numeral", "0"});
  EXPECT_EQ(div.code, 0);
  EXPECT_EQ(json::parse(div.out)["gap"], "0");

  Result geo = run({"adequacy", corpus("geometric.ppcf"), "--numeral", "2"});
  EXPECT_EQ(geo.code, 0);
  json gj = json::parse(geo.out);
  EXPECT_LE(kegel::parse_rational(gj["gap"].get<std::string>()), kegel::pow2(-40));
  EXPECT_EQ(gj["tol"], kegel::to_string(kegel::pow2(-40)));

  Result starved = run({"adequacy", corpus("geometric.ppcf"), "--numeral", "2", "--op-depth", "3"});
  EXPECT_EQ(starved.code, 1);
  EXPECT_EQ(json::parse(starved.out)["pass"], false);
}

TEST(Cli, RunIsSeeded) {
  std::vector<std::string> args{"run", corpus("geometric.ppcf"), "--samples", "500", "--seed", "11"};
  Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  int total = 0;
  for (const auto& [k, v] : j["outcomes"].items()) total += v.get<int>();
  EXPECT_EQ(total + j["timeouts"].get<int>(), 500);
  Result other = run({"run", corpus("geometric.ppcf"), "--samples", "500", "--seed", "12"});
  EXPECT_NE(other.out, a.out);
}

TEST(Cli, Fpc) {
  Result n = run({"fpc-run", corpus("nat.fpc")});
  ASSERT_EQ(n.code, 0) << n.err;
  json nj = json::parse(n.out);
  EXPECT_EQ(nj["status"], "normal");
  EXPECT_EQ(nj["steps"], 0);
  Result o = run({"fpc-run", corpus("omega.fpc"), "--fuel", "20"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(json::parse(o.out)["status"], "outOfFuel");
  Result s = run({"fpc-run", corpus("swap.fpc"), "--format", "text"});
  EXPECT_EQ(s.out, "normal: (inl[0 -> 0, 0 -> 0](\\v:0. v), \\u:0. u)\n");
  EXPECT_EQ(run({"fpc-check", corpus("ill_typed.fpc")}).code, 1);
  EXPECT_EQ(run({"fpc-check", corpus("omega.fpc")}).out, "mu X. X -> X\n");
}

TEST(Cli, OutputIsByteIdentical) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"dist", corpus("walk.ppcf"), "--depth", "60"},
           {"denote", corpus("cascade_apply.ppcf")},
           {"adequacy", corpus("walk.ppcf"), "--numeral", "3"},
           {"fpc-run", corpus("swap.fpc")},
           {"run", corpus("cascade_branch.ppcf"), "--samples", "50"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
