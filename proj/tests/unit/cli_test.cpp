#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <gtest/gtest.h>

#include "intercept/app/runner.hpp"
#include "intercept/app/scenario.hpp"
#include "intercept/app/verify.hpp"

namespace intercept::app {
namespace {

namespace fs = std::filesystem;

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("intercept-test-" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunOutcome run(const std::string& doc, const std::string& sub) {
    RunOverrides o;
    o.output = (dir_ / sub).string();
    return run_scenario_text(doc, o);
  }

  std::string read(const std::string& sub, const std::string& name) {
    std::ifstream in(dir_ / sub / name, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

TEST(ParseScenario, Minimal) {
  const Scenario s = parse_scenario(R"({"mode": "single-time", "width": 2, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]]})");
  EXPECT_EQ(s.mode, Mode::single_time);
  EXPECT_EQ(s.width, 2.0);
  EXPECT_EQ(s.density.width(), 2.0);
  ASSERT_EQ(s.positions.size(), 1u);
}

TEST(ParseScenario, ErrorsNameTheField) {
  auto field_of = [](const std::string& doc) {
    try {
      parse_scenario(doc);
    } catch (const SchemaError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of("{"), "<document>");
  EXPECT_EQ(field_of(R"({"mode": "x"})"), "mode");
  EXPECT_EQ(field_of(R"({"mode": "single-time", "width": 1, "target_speed": 1.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]]})"),
            "target_speed");
  EXPECT_EQ(field_of(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]], "colour": 1})"),
            "colour");
  EXPECT_EQ(field_of(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[1.1, 0.8]]})"),
            "positions[0]");
  EXPECT_EQ(field_of(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "piecewise_linear", "points": [[0, 1], [0.5, 1]]},
      "positions": [[0.1, 0.8]]})"),
            "density.points");
  EXPECT_EQ(field_of(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]], "solver": {"tol": -1}})"),
            "solver.tol");
}

TEST_F(ScratchDir, SingleTimeSummary) {
  const RunOutcome out = run(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]]})",
                             "single");
  EXPECT_EQ(out.exit_code, kExitOk) << out.message;
  EXPECT_NE(out.message.find("X=0.5"), std::string::npos) << out.message;
  EXPECT_TRUE(fs::exists(dir_ / "single" / "single_trace.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "single" / "summary.json"));
}

TEST_F(ScratchDir, NonConvergenceExitCode) {
  const RunOutcome out = run(R"({"mode": "single-time", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]], "solver": {"max_iter": 3}})",
                             "nc");
  EXPECT_EQ(out.exit_code, kExitNotConverged);
}

TEST_F(ScratchDir, CoincidentVehiclesExitCode) {
  const RunOutcome out = run(R"({"mode": "partition-only", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8], [0.1, 0.8]]})",
                             "bad");
  EXPECT_EQ(out.exit_code, kExitNumerical);
  EXPECT_NE(out.message.find("vehicles 1 and 2"), std::string::npos);
}

TEST_F(ScratchDir, MissingFieldExitCode) {
  const RunOutcome out = run(R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.1, 0.8]]})",
                             "missing");
  EXPECT_EQ(out.exit_code, kExitSchema);
  EXPECT_NE(out.message.find("pursuit"), std::string::npos);
}

TEST_F(ScratchDir, LloydArtifactsAreDeterministic) {
  const std::string doc = R"({"mode": "multi-lloyd", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "random_positions": {"count": 3, "y_max": 0.8},
      "seed": 42, "solver": {"rounds": 30}, "svg_every": 5})";
  run(doc, "a");
  run(doc, "b");
  for (const char* name : {"lloyd_trace.csv", "lloyd_partitions.json", "summary.json",
                           "snapshot_0000.svg", "snapshot_0005.svg", "final.svg"}) {
    const std::string a = read("a", name);
    EXPECT_FALSE(a.empty()) << name;
    EXPECT_EQ(a, read("b", name)) << name;
  }
}

TEST_F(ScratchDir, SeedChangesRandomPositions) {
  const std::string doc = R"({"mode": "partition-only", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "random_positions": {"count": 3}})";
  RunOverrides o;
  o.output = (dir_ / "s1").string();
  o.seed = 1;
  run_scenario_text(doc, o);
  o.output = (dir_ / "s2").string();
  o.seed = 2;
  run_scenario_text(doc, o);
  EXPECT_NE(read("s1", "partition.json"), read("s2", "partition.json"));
}

TEST_F(ScratchDir, PursuitAndInterceptModes) {
  EXPECT_EQ(run(R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5,
      "density": {"type": "uniform"}, "positions": [[0.0, 1.0]],
      "pursuit": {"x0": 0.0, "strategy": "height"}})",
                "p")
                .exit_code,
            kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "p" / "pursuit_trace.csv"));
  const RunOutcome scan = run(R"({"mode": "single-intercept-time", "width": 1,
      "target_speed": 0.5, "density": {"type": "uniform"}})",
                              "i");
  EXPECT_EQ(scan.exit_code, kExitOk);
  EXPECT_NE(scan.message.find("median=0.5"), std::string::npos) << scan.message;
}

TEST(Verify, UnknownSelector) { EXPECT_FALSE(verify("nonsense", 1).has_value()); }

TEST(Verify, DensityBatchPasses) {
  const auto report = verify("density", 1);
  ASSERT_TRUE(report.has_value());
  EXPECT_TRUE(report->passed()) << report->to_json();
}

}  // namespace
}  // namespace intercept::app
