#include <string>

#include <gtest/gtest.h>

#include "intercept/export.hpp"

namespace intercept {
namespace {

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(PartitionJson, OneBasedVehicles) {
  const Partition p(1.0, {Region({{0.0, 0.5}}), Region({{0.5, 1.0}})});
  const std::string json = partition_json(p);
  EXPECT_NE(json.find(R"("vehicle": 1)"), std::string::npos) << json;
  EXPECT_NE(json.find(R"("vehicle": 2)"), std::string::npos) << json;
  EXPECT_EQ(json.find(R"("vehicle": 0)"), std::string::npos) << json;
}

TEST(PursuitTraceCsv, Header) {
  const PursuitTrace t = simulate_pursuit({0.0, 0.01}, 0.0, 0.5, EvaderStrategy::height, 1e-3,
                                          2e-3);
  const std::string csv = pursuit_trace_csv(t);
  EXPECT_EQ(csv.rfind("t,px,py,ex,ey\n", 0), 0u);
}

TEST(LloydTraceCsv, HeaderAndRows) {
  const Configuration c{{{0.3, 0.2}, {0.7, 0.2}}, GameParams(1.0, 0.5)};
  LloydOptions options;
  options.rounds = 2;
  const LloydTrace t = lloyd_descend(c, Density::uniform(1.0), options);
  const std::string csv = lloyd_trace_csv(t);
  EXPECT_EQ(csv.rfind("round,vehicle,x,y,grad_norm,region_length,expected_time\n", 0), 0u);
  std::size_t lines = 0;
  for (char ch : csv) {
    lines += ch == '\n' ? 1 : 0;
  }
  EXPECT_EQ(lines, 1 + 2 * t.rounds.size());
}

TEST(SnapshotSvg, FixedViewport) {
  const std::vector<VehiclePos> ps{{0.3, 0.2}, {0.7, 0.4}};
  const Partition p(1.0, {Region({{0.0, 0.5}}), Region({{0.5, 1.0}})});
  const std::string svg = snapshot_svg(ps, p, Density::uniform(1.0), "t");
  EXPECT_NE(svg.find(R"(width="800")"), std::string::npos);
  EXPECT_NE(svg.find(R"(height="400")"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace intercept
