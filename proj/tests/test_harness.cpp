#include <gtest/gtest.h>

#include <cmath>

#include "chroma/constructions.hpp"
#include "chroma/harness.hpp"
#include "chroma/transforms.hpp"

using namespace chroma;

namespace {

const json& threshold(const json& report, const std::string& name) {
  for (const auto& th : report["thresholds"])
    if (th["name"] == name) return th;
  throw std::runtime_error("missing threshold " + name);
}

}  // namespace

TEST(Analyze, RainbowK4) {
  EdgeColoredGraph k4(4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
  auto r = analyze(k4);
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["min_color_degree"], 3);
  EXPECT_EQ(r["max_mono_degree"], 1);
  EXPECT_EQ(r["total_color_degree"], 12);
  EXPECT_EQ(r["m"], 6);
}

TEST(Analyze, ExtremalSixCycleMissesPcC4Threshold) {
  auto r = analyze(extremal_no_pc_c4(3));
  EXPECT_EQ(r["n"], 18);
  EXPECT_EQ(r["min_color_degree"], 4);
  const auto& pc = threshold(r, "pc_c4");
  EXPECT_FALSE(pc["holds"].get<bool>());
  EXPECT_NEAR(pc["margin"].get<double>(), 4 - (6 + 2 * std::sqrt(18.0) + 1), 1e-9);
  EXPECT_NEAR(pc["margin"].get<double>(), -11.485, 1e-3);
  // The bipartite form applies since the construction carries a bipartition.
  EXPECT_NO_THROW(threshold(r, "bipartite_total_degree_k22"));
}

TEST(Analyze, TransitiveSignatureTotal) {
  auto r = analyze(signature(transitive_tournament(4)));
  EXPECT_EQ(r["total_color_degree"], 9);
  EXPECT_FALSE(threshold(r, "total_degree_k22")["holds"].get<bool>());
  EXPECT_TRUE(threshold(r, "short_pc_cycle_r4")["conditional"].get<bool>());
}

TEST(Analyze, EmptyGraph) {
  auto r = analyze(EdgeColoredGraph(0));
  EXPECT_TRUE(r["min_color_degree"].is_null());
  EXPECT_TRUE(r["thresholds"].empty());
}

TEST(Json, IntegralNumbersStayIntegers) {
  EXPECT_TRUE(number(7200.0).is_number_integer());
  EXPECT_TRUE(number(-3.0).is_number_integer());
  EXPECT_TRUE(number(2.5).is_number_float());
  EXPECT_TRUE(number(NAN).is_number_float());
  EXPECT_EQ(number(7200.0).dump(), "7200");
}

TEST(Suites, ZeroTrialsIsAnEmptyPass) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, 0, 1);
    EXPECT_EQ(r.trials, 0u);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_TRUE(r.passed());
  }
}

TEST(Suites, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("nope", 1, 1), std::invalid_argument);
  EXPECT_THROW(replay_trial("nope", 0, 1), std::invalid_argument);
}

TEST(Suites, StreamDigestIsReproducibleAndOrderIndependent) {
  auto a = run_suite("signature-laws", 40, 123, {}, 1);
  auto b = run_suite("signature-laws", 40, 123, {}, 3);
  auto c = run_suite("signature-laws", 40, 124, {}, 1);
  EXPECT_EQ(a.stream_digest, b.stream_digest);
  EXPECT_EQ(a.counters, b.counters);
  EXPECT_NE(a.stream_digest, c.stream_digest);
  EXPECT_TRUE(a.passed());
}

TEST(Suites, FixedFamiliesAreCapped) {
  EXPECT_EQ(run_suite("extremal", 100, 1).trials, 6u);
  EXPECT_EQ(run_suite("pipeline", 3, 1).trials, 3u);
}

TEST(Suites, ReportJson) {
  auto r = run_suite("proposition12", 5, 9);
  auto j = to_json(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["suite"], "proposition12");
  EXPECT_EQ(j["trials"], 5);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["config"]["seed"], 9);
  EXPECT_EQ(j["stream_digest"].get<std::string>().size(), 16u);
}

TEST(Suites, ReplayMatchesRun) {
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(replay_trial("duality", i, 77).empty());
}

TEST(Suites, EverySuitePassesASmallRun) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, 8, 2024);
    EXPECT_TRUE(r.passed()) << name << ": "
                            << (r.examples.empty() ? "" : r.examples.front().assertion);
  }
}
