#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dvf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Goldens) {
  EXPECT_EQ(run({"val", "--p", "7", "392/5"}).out, "of_add(-2)  (additive: 2)\n");
  EXPECT_EQ(run({"padic", "--p", "5", "--prec", "6", "1/3 + 2/3"}).out, "1 + O(5^6)\n");
  EXPECT_EQ(run({"ext", "--p", "5", "--poly", "x^2-5", "info", "--json"}).out,
            "{\"certificate\":\"eisenstein\",\"n\":2,\"e\":2,\"f\":1,\"residue_order\":5,\"uniformizer\":\"a\"}\n");
  EXPECT_EQ(run({"laurent", "--field", "F2", "--prec", "8", "1/(1+X)"}).out,
            "1 + X + X^2 + X^3 + X^4 + X^5 + X^6 + X^7 + O(X^8)\n");
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"val", "--p", "5", "0"}).out, "0  (additive: inf)\n");
  EXPECT_EQ(run({"val", "--field", "F3", "X^2/(X+1)"}).out, "of_add(-2)  (additive: 2)\n");
  EXPECT_EQ(run({"factor", "--p", "5", "50"}).out, "5^2 * (2)\n");
  EXPECT_EQ(run({"factor", "--field", "F2", "X^3+X^4"}).out, "X^3 * (1 + X)\n");
  EXPECT_EQ(run({"padic", "--p", "5", "--prec", "4", "1/3"}).out, "2 + 3*5 + 5^2 + 3*5^3 + O(5^4)\n");
  EXPECT_EQ(run({"laurent", "--field", "Q", "--prec", "2", "1/(X^2+X^3)"}).out, "X^-2 - X^-1 + 1 - X + O(X^2)\n");
  EXPECT_EQ(run({"ext", "--p", "5", "--poly", "x^2-5", "val", "a"}).out, "1/2  (normalized: 1)\n");
  EXPECT_EQ(run({"ext", "--p", "5", "--poly", "x^2-5", "--prec", "3", "norm", "1+a"}).out,
            "1 + 4*5 + 4*5^2 + O(5^3)\n");
  EXPECT_EQ(run({"ext", "--p", "5", "--poly", "x^2-5", "integral", "a/5"}).out, "false\n");
  EXPECT_EQ(run({"ext", "--p", "5", "--poly", "x^2-2", "residue", "3+a"}).out, "3 + t\n");
  EXPECT_EQ(run({"ext", "--field", "F3", "--poly", "x^2-X", "info"}).out,
            "certificate: eisenstein\nn: 2\ne: 2\nf: 1\nresidue_order: 3\nuniformizer: a\n");
  EXPECT_EQ(run({"ext", "--field", "F3", "--poly", "x^2-X", "val", "a^3"}).out, "3/2  (normalized: 3)\n");
}

TEST(Cli, ExitCodes) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{}, 2},
      {{"bogus"}, 2},
      {{"val", "1"}, 2},
      {{"val", "--p", "6", "1"}, 2},
      {{"val", "--p", "5", "--field", "Q", "1"}, 2},
      {{"val", "--p", "5", "2^^3"}, 2},
      {{"val", "--p", "5", "Y"}, 2},
      {{"val", "--field", "F4", "X"}, 2},
      {{"padic", "--p", "5", "--prec", "0", "1"}, 2},
      {{"padic", "--p", "5", "--prec", "x", "1"}, 2},
      {{"ext", "--p", "5", "info"}, 2},
      {{"ext", "--p", "5", "--poly", "x^2-5"}, 2},
      {{"val", "--p", "5", "1/0"}, 1},
      {{"padic", "--p", "5", "1/(1-1)"}, 1},
      {{"factor", "--p", "5", "1/5"}, 1},
      {{"factor", "--p", "5", "0"}, 1},
      {{"ext", "--p", "5", "--poly", "x^2-1", "info"}, 1},
      {{"ext", "--p", "5", "--poly", "x^2-1", "val", "a"}, 0},
      {{"ext", "--p", "5", "--poly", "x^2-5", "residue", "1/a"}, 1},
      {{"ext", "--p", "5", "--poly", "2*x^2-5", "info"}, 1},
      {{"ext", "--p", "5", "--poly", "x^2-5", "val", "0*a"}, 0},
      {{"ext", "--p", "5", "--poly", "x^2-5", "norm", "1/(a-a)"}, 1},
      {{"--help"}, 0},
  };
  for (const auto& [args, code] : cases) {
    const Result r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, code) << joined << "\n" << r.err;
    if (code != 0) {
      EXPECT_TRUE(r.out.empty()) << joined;
      EXPECT_FALSE(r.err.empty()) << joined;
    }
  }
}

std::vector<std::string> keys(const std::string& line) {
  const auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

TEST(Cli, JsonSchemaIsStable) {
  const std::vector<std::vector<std::vector<std::string>>> groups{
      {{"val", "--p", "5", "50"}, {"val", "--p", "5", "0"}, {"val", "--field", "Q", "1/X"}},
      {{"padic", "--p", "5", "3"}, {"padic", "--p", "5", "1-1"}, {"padic", "--p", "7", "0"}},
      {{"laurent", "--field", "Q", "1/X"}, {"laurent", "--field", "F2", "0"}},
      {{"factor", "--p", "5", "50"}, {"factor", "--field", "F2", "X^3+X^4"}},
      {{"ext", "--p", "5", "--poly", "x^2-5", "info"}, {"ext", "--p", "5", "--poly", "x^2-2", "info"}},
      {{"ext", "--p", "5", "--poly", "x^2-5", "val", "a"}, {"ext", "--p", "5", "--poly", "x^2-5", "val", "0"},
       {"ext", "--p", "5", "--poly", "x^2-1", "val", "a"}},
  };
  for (const auto& group : groups) {
    std::optional<std::vector<std::string>> expected;
    for (auto args : group) {
      args.push_back("--json");
      const Result r = run(args);
      ASSERT_EQ(r.code, 0) << r.err;
      ASSERT_EQ(r.out.back(), '\n');
      const auto k = keys(r.out);
      if (!expected) expected = k;
      EXPECT_EQ(k, *expected) << r.out;
      if (args[0] != "ext" || args[5] != "info") {
        EXPECT_EQ(k[0], "result");
        EXPECT_EQ(k[1], "valuation");
        EXPECT_NE(std::find(k.begin(), k.end(), "precision"), k.end());
      }
    }
  }
}

}  // namespace
