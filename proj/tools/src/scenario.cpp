#include "intercept/app/scenario.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <utility>

#include <json.hpp>

#include "intercept/errors.hpp"

namespace intercept::app {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModes{{
    {Mode::single_time, "single-time"},
    {Mode::single_height, "single-height"},
    {Mode::single_intercept_time, "single-intercept-time"},
    {Mode::multi_lloyd, "multi-lloyd"},
    {Mode::simulate_pursuit, "simulate-pursuit"},
    {Mode::partition_only, "partition-only"},
}};

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string join(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void expect_object(const json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw SchemaError(path.empty() ? "<document>" : path, "expected an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (std::string_view key : allowed) {
      known = known || item.key() == key;
    }
    if (!known) {
      throw SchemaError(join(path, item.key()), "unknown field");
    }
  }
}

const json& required(const json& j, const std::string& path, std::string_view key) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) {
    throw SchemaError(join(path, key), "required field is missing");
  }
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw SchemaError(path, "expected a number");
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    throw SchemaError(path, "expected a finite number");
  }
  return value;
}

double positive(const json& j, const std::string& path) {
  const double value = number(j, path);
  if (!(value > 0.0)) {
    throw SchemaError(path, "must be positive");
  }
  return value;
}

std::uint64_t unsigned_integer(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    throw SchemaError(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) {
    throw SchemaError(path, "expected a string");
  }
  return j.get<std::string>();
}

Vec2 pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(path, "expected a pair [x, y]");
  }
  return {number(j[0], join(path, 0)), number(j[1], join(path, 1))};
}

Density parse_density(const json& j, double width) {
  const std::string path = "density";
  expect_object(j, path, {"type", "points"});
  const std::string type = text(required(j, path, "type"), join(path, "type"));
  if (type == "uniform") {
    if (j.contains("points")) {
      throw SchemaError(join(path, "points"), "not allowed for a uniform density");
    }
    return Density::uniform(width);
  }
  if (type != "piecewise_linear") {
    throw SchemaError(join(path, "type"), "expected \"uniform\" or \"piecewise_linear\"");
  }
  const std::string points_path = join(path, "points");
  const json& points = required(j, path, "points");
  if (!points.is_array() || points.size() < 2) {
    throw SchemaError(points_path, "expected at least two [x, value] pairs");
  }
  std::vector<Density::Breakpoint> breakpoints;
  for (std::size_t s = 0; s < points.size(); ++s) {
    const Vec2 p = pair(points[s], join(points_path, s));
    breakpoints.push_back({p.x, p.y});
  }
  if (breakpoints.back().x != width) {
    throw SchemaError(points_path, "last breakpoint must sit at x = width");
  }
  try {
    return Density::piecewise_linear(std::move(breakpoints));
  } catch (const DomainError& e) {
    throw SchemaError(points_path, e.what());
  }
}

void parse_solver(const json& j, SolverSettings& s) {
  const std::string path = "solver";
  expect_object(j, path,
                {"tol", "max_iter", "rounds", "substeps", "criticality_tol", "dt",
                 "capture_radius"});
  if (j.contains("tol")) {
    s.tol = positive(j["tol"], join(path, "tol"));
  }
  if (j.contains("max_iter")) {
    s.max_iter = unsigned_integer(j["max_iter"], join(path, "max_iter"));
  }
  if (j.contains("rounds")) {
    s.rounds = unsigned_integer(j["rounds"], join(path, "rounds"));
  }
  if (j.contains("substeps")) {
    const std::uint64_t substeps = unsigned_integer(j["substeps"], join(path, "substeps"));
    if (substeps == 0 || substeps > 1'000'000) {
      throw SchemaError(join(path, "substeps"), "must be in [1, 1000000]");
    }
    s.substeps = static_cast<int>(substeps);
  }
  if (j.contains("criticality_tol")) {
    s.criticality_tol = positive(j["criticality_tol"], join(path, "criticality_tol"));
  }
  if (j.contains("dt")) {
    s.dt = positive(j["dt"], join(path, "dt"));
  }
  if (j.contains("capture_radius")) {
    s.capture_radius = positive(j["capture_radius"], join(path, "capture_radius"));
  }
  if (s.capture_radius < s.dt) {
    throw SchemaError(join(path, "capture_radius"), "must be at least dt");
  }
}

PursuitSettings parse_pursuit(const json& j, double width) {
  const std::string path = "pursuit";
  expect_object(j, path, {"x0", "strategy"});
  PursuitSettings out;
  out.x0 = number(required(j, path, "x0"), join(path, "x0"));
  if (out.x0 < 0.0 || out.x0 > width) {
    throw SchemaError(join(path, "x0"), "must lie in [0, width]");
  }
  const std::string strategy = text(required(j, path, "strategy"), join(path, "strategy"));
  if (strategy == "height") {
    out.strategy = EvaderStrategy::height;
  } else if (strategy == "wall") {
    out.strategy = EvaderStrategy::wall;
  } else {
    throw SchemaError(join(path, "strategy"), "expected \"height\" or \"wall\"");
  }
  return out;
}

}  // namespace

std::string_view mode_name(Mode mode) {
  for (const auto& [m, name] : kModes) {
    if (m == mode) {
      return name;
    }
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError("<document>", std::string("invalid JSON: ") + e.what());
  }
  expect_object(j, "",
                {"mode", "width", "target_speed", "density", "positions", "random_positions",
                 "solver", "pursuit", "output", "seed", "svg_every"});

  Scenario s;
  const std::string mode = text(required(j, "", "mode"), "mode");
  bool found = false;
  for (const auto& [m, name] : kModes) {
    if (name == mode) {
      s.mode = m;
      found = true;
    }
  }
  if (!found) {
    throw SchemaError("mode", "unknown mode \"" + mode + "\"");
  }

  s.width = positive(required(j, "", "width"), "width");
  s.target_speed = number(required(j, "", "target_speed"), "target_speed");
  const double speed_floor = s.mode == Mode::single_intercept_time ? 1e-9 : 0.0;
  if (!(s.target_speed > speed_floor && s.target_speed < 1.0)) {
    throw SchemaError("target_speed",
                      s.mode == Mode::single_intercept_time ? "must lie in [1e-9, 1)"
                                                            : "must lie in (0, 1)");
  }
  s.density = parse_density(required(j, "", "density"), s.width);

  if (j.contains("positions")) {
    const json& positions = j["positions"];
    if (!positions.is_array()) {
      throw SchemaError("positions", "expected an array of [x, y] pairs");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const std::string path = join("positions", i);
      const Vec2 p = pair(positions[i], path);
      if (p.x < 0.0 || p.x > s.width) {
        throw SchemaError(path, "x must lie in [0, width]");
      }
      if (p.y < 0.0) {
        throw SchemaError(path, "y must be non-negative");
      }
      s.positions.push_back(p);
    }
  }
  if (j.contains("random_positions")) {
    const json& r = j["random_positions"];
    expect_object(r, "random_positions", {"count", "y_max"});
    RandomPositions rp;
    rp.count = unsigned_integer(required(r, "random_positions", "count"),
                                "random_positions.count");
    if (rp.count == 0) {
      throw SchemaError("random_positions.count", "must be at least 1");
    }
    if (r.contains("y_max")) {
      rp.y_max = positive(r["y_max"], "random_positions.y_max");
    }
    s.random_positions = rp;
  }
  if (j.contains("solver")) {
    parse_solver(j["solver"], s.solver);
  }
  if (j.contains("pursuit")) {
    s.pursuit = parse_pursuit(j["pursuit"], s.width);
  }
  if (j.contains("output")) {
    s.output = text(j["output"], "output");
    if (s.output.empty()) {
      throw SchemaError("output", "must not be empty");
    }
  }
  if (j.contains("seed")) {
    s.seed = unsigned_integer(j["seed"], "seed");
  }
  if (j.contains("svg_every")) {
    s.svg_every = unsigned_integer(j["svg_every"], "svg_every");
  }

  // Mode-specific requirements.
  switch (s.mode) {
    case Mode::single_time:
    case Mode::single_height:
      if (s.positions.empty()) {
        throw SchemaError("positions", "required field is missing (start position)");
      }
      if (!(s.positions.front().y > 0.0)) {
        throw SchemaError("positions[0]", "start position needs y > 0");
      }
      break;
    case Mode::simulate_pursuit:
      if (s.positions.empty()) {
        throw SchemaError("positions", "required field is missing (pursuer start)");
      }
      if (!s.pursuit) {
        throw SchemaError("pursuit", "required field is missing");
      }
      break;
    case Mode::multi_lloyd:
    case Mode::partition_only:
      if (s.positions.empty() && !s.random_positions) {
        throw SchemaError("positions", "required field is missing (or give random_positions)");
      }
      if (!s.positions.empty() && s.random_positions) {
        throw SchemaError("random_positions", "give either positions or random_positions");
      }
      break;
    case Mode::single_intercept_time:
      break;
  }
  return s;
}

}  // namespace intercept::app
