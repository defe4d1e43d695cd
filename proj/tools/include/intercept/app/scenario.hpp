#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "intercept/density.hpp"
#include "intercept/pursuit.hpp"
#include "intercept/vec2.hpp"

namespace intercept::app {

enum class Mode {
  single_time,
  single_height,
  single_intercept_time,
  multi_lloyd,
  simulate_pursuit,
  partition_only,
};

std::string_view mode_name(Mode mode);

/// Malformed scenario document. `field` is the JSON path of the offending
/// member, e.g. "solver.tol".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct SolverSettings {
  double tol = 0.0;  // 0 selects the mode default
  std::size_t max_iter = 10000;
  std::size_t rounds = 500;
  int substeps = 64;
  double criticality_tol = 1e-5;
  double dt = 1e-4;
  double capture_radius = 2e-4;
};

struct PursuitSettings {
  double x0 = 0.0;
  EvaderStrategy strategy = EvaderStrategy::height;
};

struct RandomPositions {
  std::size_t count = 0;
  double y_max = 1.0;
};

struct Scenario {
  Mode mode = Mode::single_time;
  double width = 1.0;
  double target_speed = 0.5;
  Density density = Density::uniform(1.0);
  std::vector<VehiclePos> positions;
  std::optional<RandomPositions> random_positions;
  SolverSettings solver;
  std::optional<PursuitSettings> pursuit;
  std::string output = "intercept_output";
  std::uint64_t seed = 0;
  std::size_t svg_every = 10;
};

/// Parses and validates a scenario JSON document. Throws SchemaError.
Scenario parse_scenario(std::string_view text);

}  // namespace intercept::app
