#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "tabalg/scheme.hpp"
#include "tabalg/tba_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = tabalg::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string example() { return fixtures::data_path("example43.tba"); }

}  // namespace

TEST(Cli, ChartabPrintsTable) {
  auto r = run({"chartab", example()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "chi2  1   2  -3  |  25/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "chi3  1  -1   0  |  56/3")) << r.out;
  EXPECT_TRUE(contains(r.out, "standard class: no"));
  EXPECT_TRUE(contains(r.out, "orthogonality residual: 0 (exact)"));
}

TEST(Cli, StandardNegativeVerdict) {
  auto r = run({"standard", example()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "zeta: (1, 25/3, 56/3)"));
}

TEST(Cli, GenAffinePipesIntoChartab) {
  auto gen = run({"gen", "affine", "3"});
  ASSERT_EQ(gen.code, 0);
  auto back = tabalg::parse_tba(gen.out);
  EXPECT_EQ(back.rank(), 5u);
  auto r = run({"chartab", "-"}, gen.out);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "standard class: yes"));
  EXPECT_EQ(run({"verify", "-"}, gen.out).code, 0);
}

TEST(Cli, VerifyReportsBadIndex) {
  auto r = run({"verify", fixtures::data_path("bad_index.tba")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "line 4")) << r.err;
  EXPECT_EQ(run({"verify", "/nonexistent.tba"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, VerifyNegativeVerdict) {
  auto r = run({"verify", "-"}, "tba 1\nrank 2\nsc 0 0 0 1\nsc 0 1 1 1\nsc 1 0 1 1\nsc 1 1 0 1\nsc 1 1 1 1\ndeg 1 1\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "violation: degree-homomorphism"));
}

TEST(Cli, QuotientOutputReReads) {
  auto gen = run({"gen", "affine", "3"});
  auto r = run({"quotient", "-", "--subset", "r1"}, gen.out);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "# multiplicities preserved: yes"));
  EXPECT_EQ(run({"verify", "-"}, r.out).code, 0);
  auto t = tabalg::parse_tba(r.out);
  EXPECT_EQ(t.rank(), 2u);

  auto not_closed = run({"quotient", "-", "--subset", "1,2"}, gen.out);
  EXPECT_EQ(not_closed.code, 2);
  EXPECT_TRUE(contains(not_closed.err, "closure"));
}

TEST(Cli, ClosedSubsets) {
  auto r = run({"closed", example()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "closed subsets: 3"));
  EXPECT_TRUE(contains(r.out, "{1, b}  |C+| = 3"));
}

TEST(Cli, DualEmitsTable) {
  auto r = run({"dual", example()});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_TRUE(contains(r.out, "# dual degrees: (1, 25/3, 56/3)"));
  auto t = tabalg::parse_tba(r.out);
  EXPECT_EQ(t.degree(2), tabalg::Scalar::fraction(56, 3));
}

TEST(Cli, Schemes) {
  auto petersen = fixtures::data_path("petersen.scheme");
  auto check = run({"scheme", "check", petersen});
  EXPECT_EQ(check.code, 0);
  EXPECT_TRUE(contains(check.out, "scheme: yes"));
  auto alg = run({"scheme", "algebra", petersen});
  EXPECT_EQ(alg.code, 0) << alg.err;
  EXPECT_EQ(tabalg::parse_tba(alg.out).rank(), 3u);
  auto bad = run({"scheme", "check", "-"}, "scheme 1\npoints 3\n0 1 2\n1 0 1\n2 1 0\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "scheme: no"));
}

TEST(Cli, GenSrg) {
  auto r = run({"gen", "srg", "10", "3", "0", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "# zeta: {1, 4, 5}"));
  auto nonintegral = run({"gen", "srg", "7", "3", "0", "2"});
  EXPECT_EQ(nonintegral.code, 0);
  EXPECT_TRUE(contains(nonintegral.out, "# standard class: no"));
  EXPECT_EQ(run({"gen", "srg", "8", "3", "0", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "affine", "1"}).code, 2);
}

TEST(Cli, JsonMirrorsReport) {
  auto r = run({"--json", "chartab", example()});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["table"]["characters"][1]["zeta"], "25/3");
  EXPECT_EQ(doc["standard_class"]["member"], false);
  EXPECT_EQ(doc["exit"], 0);
  EXPECT_EQ(doc["input"]["fnv1a64"].get<std::string>().size(), 16u);
}

TEST(Cli, ExactFlag) {
  auto pentagon = tabalg::write_tba(
      tabalg::scheme::scheme_to_algebra(fixtures::pentagon()).table);
  EXPECT_EQ(run({"chartab", "-"}, pentagon).code, 0);
  EXPECT_EQ(run({"--exact", "chartab", "-"}, pentagon).code, 2);
}

TEST(Cli, DeterministicOutput) {
  auto pentagon = tabalg::write_tba(
      tabalg::scheme::scheme_to_algebra(fixtures::pentagon()).table);
  auto a = run({"--seed", "5", "chartab", "-"}, pentagon);
  auto b = run({"--seed", "5", "chartab", "-"}, pentagon);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(tabalg::cli::fnv1a64(""), "cbf29ce484222325");
}
