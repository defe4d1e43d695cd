#include "intercept/app/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "intercept/app/sampling.hpp"
#include "intercept/errors.hpp"
#include "intercept/export.hpp"
#include "intercept/lloyd.hpp"
#include "intercept/partition.hpp"
#include "intercept/pursuit.hpp"
#include "intercept/single_vehicle.hpp"

namespace intercept::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
}

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

std::string fmt(double value) { return format_number(value); }

const char* flag(bool value) { return value ? "true" : "false"; }

struct Artifacts {
  fs::path dir;
  json summary;
  std::string line;
  int exit_code = kExitOk;
};

void run_single(const Scenario& s, Artifacts& a) {
  const bool height = s.mode == Mode::single_height;
  const CostCoeffs k = height ? CostCoeffs::vertical_height(s.target_speed)
                              : CostCoeffs::constrained_time(s.target_speed);
  DescentOptions options;
  options.tol = s.solver.tol > 0.0 ? s.solver.tol : 1e-8;
  options.max_iter = s.solver.max_iter;
  const DescentResult r = optimize_single(s.positions.front(), k, s.density, options);
  write_file(a.dir / "single_trace.csv", descent_trace_csv(r));
  a.summary["start"] = point_json(s.positions.front());
  a.summary["optimum"] = point_json(r.optimum);
  a.summary["cost"] = r.cost;
  a.summary["grad_norm"] = r.grad_norm;
  a.summary["iterations"] = r.iterations;
  a.summary["converged"] = r.converged;
  a.line = "X=" + fmt(r.optimum.x) + " Y=" + fmt(r.optimum.y) + " cost=" + fmt(r.cost) +
           " iterations=" + std::to_string(r.iterations) + " critical=" + flag(r.converged);
  if (!r.converged) {
    a.exit_code = kExitNotConverged;
  }
}

void run_intercept_scan(const Scenario& s, Artifacts& a) {
  const double v = s.target_speed;
  auto expected = [&](double X) {
    const double kink[] = {X};
    return s.density.integrate(
        [&](double x) { return intercept_time({X, 0.0}, x, v); }, kink);
  };
  const double step = 1e-3 * s.width;
  const auto n = static_cast<std::size_t>(std::llround(s.width / step));
  std::string csv = "x,expected_time\n";
  double best_x = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= n; ++i) {
    const double X = s.width * static_cast<double>(i) / static_cast<double>(n);
    const double value = expected(X);
    csv += fmt(X) + "," + fmt(value) + "\n";
    if (value < best) {
      best = value;
      best_x = X;
    }
  }
  write_file(a.dir / "intercept_scan.csv", csv);
  const double median = s.density.median();
  const double at_median = expected(median);
  a.summary["median"] = median;
  a.summary["scan_argmin"] = best_x;
  a.summary["scan_step"] = step;
  a.summary["cost"] = at_median;
  a.line = "median=" + fmt(median) + " scan_argmin=" + fmt(best_x) + " cost=" + fmt(at_median) +
           " iterations=" + std::to_string(n + 1);
}

std::vector<VehiclePos> initial_positions(const Scenario& s) {
  if (!s.random_positions) {
    return s.positions;
  }
  Sampler sampler(s.seed);
  // Keep random starts off the generator so every gradient is defined.
  return sampler.configuration(s.random_positions->count, s.width,
                               1e-3 * s.random_positions->y_max, s.random_positions->y_max,
                               1e-3 * s.width);
}

std::string snapshot_name(std::size_t round) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "snapshot_%04zu.svg", round);
  return buffer;
}

void run_lloyd(const Scenario& s, Artifacts& a) {
  const GameParams g(s.width, s.target_speed);
  const Configuration start{initial_positions(s), g};
  start.validate();
  LloydOptions options;
  options.rounds = s.solver.rounds;
  options.tol = s.solver.tol > 0.0 ? s.solver.tol : 1e-6;
  options.substeps = s.solver.substeps;
  const LloydTrace trace = lloyd_descend(start, s.density, options);

  write_file(a.dir / "lloyd_trace.csv", lloyd_trace_csv(trace));
  write_file(a.dir / "lloyd_partitions.json", lloyd_partitions_json(trace));
  if (s.svg_every > 0) {
    for (const LloydRecord& r : trace.rounds) {
      if (r.round % s.svg_every == 0) {
        write_file(a.dir / snapshot_name(r.round),
                   snapshot_svg(r.positions, r.partition, s.density,
                                "round " + std::to_string(r.round)));
      }
    }
  }
  const Configuration final_config{trace.final_positions, g};
  const Partition final_partition = dominance_partition(final_config.positions, g);
  write_file(a.dir / "final.svg",
             snapshot_svg(final_config.positions, final_partition, s.density, "final"));

  const double cost = expected_time_multi(final_config, s.density);
  const CriticalityReport crit = is_critical(final_config, s.density, s.solver.criticality_tol);
  json vehicles = json::array();
  for (std::size_t i = 0; i < final_config.size(); ++i) {
    json v;
    v["vehicle"] = i + 1;
    v["start"] = point_json(start.positions[i]);
    v["final"] = point_json(final_config.positions[i]);
    v["region_components"] = final_partition[i].components();
    v["region_length"] = final_partition[i].length();
    v["grad_norm"] = crit.vehicles[i].grad_norm;
    v["recovery_rounds"] = trace.recoveries[i];
    v["oscillations"] = trace.oscillations[i];
    vehicles.push_back(std::move(v));
  }
  std::string stability = "n/a";
  if (crit.critical) {
    StabilityOptions so;
    so.criticality_tol = s.solver.criticality_tol;
    so.substeps = s.solver.substeps;
    const StabilityReport report = instability_check(final_config, s.density, so);
    stability = report.unstable ? "unstable" : "stable-candidate";
  }
  a.summary["rounds"] = trace.rounds.size();
  a.summary["converged"] = trace.converged;
  a.summary["cost"] = cost;
  a.summary["critical"] = crit.critical;
  a.summary["stability"] = stability;
  a.summary["vehicles"] = std::move(vehicles);
  a.line = "cost=" + fmt(cost) + " iterations=" + std::to_string(trace.rounds.size()) +
           " critical=" + flag(crit.critical) + " stability=" + stability;
  if (!trace.converged) {
    a.exit_code = kExitNotConverged;
  }
}

void run_pursuit(const Scenario& s, Artifacts& a) {
  const VehiclePos p0 = s.positions.front();
  const double x0 = s.pursuit->x0;
  const double v = s.target_speed;
  const PursuitTrace trace = simulate_pursuit(p0, x0, v, s.pursuit->strategy, s.solver.dt,
                                              s.solver.capture_radius);
  write_file(a.dir / "pursuit_trace.csv", pursuit_trace_csv(trace));
  a.summary["captured"] = trace.captured;
  a.summary["capture_time"] = trace.capture_time;
  a.summary["capture_point"] = point_json(trace.capture_point);
  a.summary["steps"] = trace.pursuer.size() - 1;
  if (s.pursuit->strategy == EvaderStrategy::height) {
    const double h = vertical_height(p0, x0, v);
    a.summary["strategy"] = "height";
    a.summary["predicted_height"] = h;
    a.summary["height_error"] = std::abs(trace.capture_point.y - h);
  } else {
    const double t = intercept_time(p0, x0, v);
    const std::optional<double> unsquared = intercept_time_unsquared_form(p0, x0, v);
    a.summary["strategy"] = "wall";
    a.summary["predicted_time"] = t;
    a.summary["time_error"] = std::abs(trace.capture_time - t);
    a.summary["unsquared_form_time"] = unsquared ? json(*unsquared) : json(nullptr);
  }
  a.line = "capture_time=" + fmt(trace.capture_time) + " capture_point=(" +
           fmt(trace.capture_point.x) + "," + fmt(trace.capture_point.y) +
           ") iterations=" + std::to_string(trace.pursuer.size() - 1) +
           " captured=" + flag(trace.captured);
  if (!trace.captured) {
    throw InvariantError("pursuit ended without capture before the time cap");
  }
}

void run_partition(const Scenario& s, Artifacts& a) {
  const GameParams g(s.width, s.target_speed);
  const Configuration c{initial_positions(s), g};
  c.validate();
  const Partition partition = dominance_partition(c.positions, g);
  write_file(a.dir / "partition.json", partition_json(partition));
  write_file(a.dir / "partition.svg", snapshot_svg(c.positions, partition, s.density));
  const double cost = expected_time_multi(c, s.density);
  json vehicles = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    vehicles.push_back({{"vehicle", i + 1},
                        {"position", point_json(c.positions[i])},
                        {"region_length", partition[i].length()},
                        {"region_components", partition[i].components()}});
  }
  a.summary["cost"] = cost;
  a.summary["covered_length"] = partition.covered_length();
  a.summary["vehicles"] = std::move(vehicles);
  a.line = "cost=" + fmt(cost) + " vehicles=" + std::to_string(c.size());
}

}  // namespace

RunOutcome run_scenario(const Scenario& s) {
  Artifacts a;
  a.dir = s.output;
  fs::create_directories(a.dir);
  a.summary["mode"] = std::string(mode_name(s.mode));
  a.summary["width"] = s.width;
  a.summary["target_speed"] = s.target_speed;
  a.summary["seed"] = s.seed;
  switch (s.mode) {
    case Mode::single_time:
    case Mode::single_height:
      run_single(s, a);
      break;
    case Mode::single_intercept_time:
      run_intercept_scan(s, a);
      break;
    case Mode::multi_lloyd:
      run_lloyd(s, a);
      break;
    case Mode::simulate_pursuit:
      run_pursuit(s, a);
      break;
    case Mode::partition_only:
      run_partition(s, a);
      break;
  }
  a.summary["exit_code"] = a.exit_code;
  write_file(a.dir / "summary.json", a.summary.dump(2) + "\n");
  std::string line = std::string(mode_name(s.mode)) + ": " + a.line;
  if (a.exit_code == kExitNotConverged) {
    line += " (not converged)";
  }
  return {a.exit_code, line};
}

RunOutcome run_scenario_text(std::string_view text, const RunOverrides& overrides) {
  try {
    Scenario s = parse_scenario(text);
    if (overrides.seed) {
      s.seed = *overrides.seed;
    }
    if (overrides.output) {
      s.output = *overrides.output;
    }
    if (overrides.svg_every) {
      s.svg_every = *overrides.svg_every;
    }
    return run_scenario(s);
  } catch (const SchemaError& e) {
    return {kExitSchema, std::string("schema error: ") + e.what()};
  } catch (const IoError& e) {
    return {kExitFailure, std::string("i/o error: ") + e.what()};
  } catch (const fs::filesystem_error& e) {
    return {kExitFailure, std::string("i/o error: ") + e.what()};
  } catch (const CoincidentVehiclesError& e) {
    return {kExitNumerical, std::string("invariant violated: ") + e.what()};
  } catch (const EmptyRegionError& e) {
    return {kExitNumerical, std::string("invariant violated: ") + e.what()};
  } catch (const std::domain_error& e) {
    return {kExitNumerical, std::string("numerical error: ") + e.what()};
  } catch (const InvariantError& e) {
    return {kExitNumerical, std::string("invariant violated: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {kExitNumerical, std::string("invariant violated: ") + e.what()};
  }
}

RunOutcome run_scenario_file(const fs::path& path, const RunOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return {kExitFailure, "i/o error: cannot read " + path.string()};
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return run_scenario_text(text, overrides);
}

}  // namespace intercept::app
