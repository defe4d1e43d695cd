#include "intercept/lloyd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intercept/errors.hpp"
#include "intercept/single_vehicle.hpp"

namespace intercept {

namespace {

CostCoeffs time_coeffs(const Configuration& c) {
  return CostCoeffs::constrained_time(c.params.target_speed());
}

Vec2 saturate(Vec2 z) {
  const double n = norm(z);
  return n <= 1.0 ? z : z / n;
}

void check_separation(const std::vector<VehiclePos>& ps, double width) {
  const double guard = 1e-9 * width;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (distance(ps[i], ps[j]) < guard) {
        throw CoincidentVehiclesError(i, j);
      }
    }
  }
}

// Saturated descent of one vehicle over a frozen region for unit time.
VehiclePos flow_on_region(VehiclePos p, const CostCoeffs& k, const Density& d,
                          const Region& region, int substeps) {
  const double width = d.width();
  const double h = 1.0 / substeps;
  auto field = [&](VehiclePos q) {
    q.y = std::max(q.y, 0.0);
    return -saturate(cost_gradient_on_region(q, k, d, region));
  };
  for (int s = 0; s < substeps; ++s) {
    const Vec2 k1 = field(p);
    const Vec2 k2 = field(p + 0.5 * h * k1);
    const Vec2 k3 = field(p + 0.5 * h * k2);
    const Vec2 k4 = field(p + h * k3);
    p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    p.x = std::clamp(p.x, 0.0, width);
    p.y = std::max(p.y, 0.0);
  }
  return p;
}

std::vector<VehiclePos> advance(const Configuration& c, const Partition& partition,
                                const Density& d, int substeps) {
  if (substeps < 1) {
    throw DomainError("substeps must be at least 1");
  }
  const CostCoeffs k = time_coeffs(c);
  std::vector<VehiclePos> next(c.positions.size());
  for (std::size_t i = 0; i < c.positions.size(); ++i) {
    const VehiclePos p = c.positions[i];
    if (partition[i].empty()) {
      next[i] = {p.x, p.y - std::min(1.0, p.y)};
    } else {
      next[i] = flow_on_region(p, k, d, partition[i], substeps);
    }
  }
  check_separation(next, c.params.width());
  return next;
}

double time_over_partition(const Configuration& c, const Partition& partition, const Density& d) {
  const CostCoeffs k = time_coeffs(c);
  double total = 0.0;
  for (std::size_t i = 0; i < c.positions.size(); ++i) {
    if (!partition[i].empty()) {
      total += expected_cost(c.positions[i], k, d, partition[i]);
    }
  }
  return total;
}

}  // namespace

void Configuration::validate() const {
  if (positions.empty()) {
    throw DomainError("configuration has no vehicles");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const VehiclePos p = positions[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.y < 0.0) {
      throw DomainError("vehicle " + std::to_string(i + 1) +
                        " needs finite coordinates with Y >= 0");
    }
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (positions[i] == positions[j]) {
        throw CoincidentVehiclesError(i, j);
      }
    }
  }
}

double expected_time_multi(const Configuration& c, const Density& d) {
  c.validate();
  return time_over_partition(c, dominance_partition(c.positions, c.params), d);
}

double expected_time_pointwise_min(const Configuration& c, const Density& d) {
  c.validate();
  const CostCoeffs k = time_coeffs(c);
  std::vector<double> splits;
  for (const VehiclePos& p : c.positions) {
    if (p.x > 0.0 && p.x < d.width()) {
      splits.push_back(p.x);
    }
  }
  std::sort(splits.begin(), splits.end());
  return d.integrate(
      [&](double x) {
        double best = generic_cost(c.positions.front(), x, k);
        for (const VehiclePos& p : c.positions) {
          best = std::min(best, generic_cost(p, x, k));
        }
        return best;
      },
      splits);
}

Gradient region_gradient(const Configuration& c, std::size_t i, const Density& d) {
  c.validate();
  if (i >= c.size()) {
    throw DomainError("vehicle index out of range");
  }
  const Partition partition = dominance_partition(c.positions, c.params);
  const Region& region = partition[i];
  if (region.empty()) {
    throw EmptyRegionError(i);
  }
  const VehiclePos p = c.positions[i];
  if (p.y == 0.0 && region.contains_interior(p.x)) {
    throw SingularityError("region gradient is singular: vehicle " + std::to_string(i + 1) +
                           " sits on the generator inside its own region");
  }
  return cost_gradient_on_region(p, time_coeffs(c), d, region);
}

Configuration lloyd_round(const Configuration& c, const Density& d, int substeps) {
  c.validate();
  const Partition partition = dominance_partition(c.positions, c.params);
  return Configuration{advance(c, partition, d, substeps), c.params};
}

double LloydTrace::max_grad_norm(std::size_t round) const {
  const auto& norms = rounds.at(round).grad_norms;
  return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

LloydTrace lloyd_descend(const Configuration& start, const Density& d,
                         const LloydOptions& options) {
  start.validate();
  const std::size_t m = start.size();
  const CostCoeffs k = time_coeffs(start);

  LloydTrace trace;
  trace.recoveries.resize(m);
  trace.oscillations.assign(m, 0);

  Configuration current = start;
  std::size_t streak = 0;
  for (std::size_t round = 0;; ++round) {
    LloydRecord record;
    record.round = round;
    record.positions = current.positions;
    record.partition = dominance_partition(current.positions, current.params);
    record.expected_time = time_over_partition(current, record.partition, d);
    record.grad_norms.assign(m, 0.0);
    record.empty.assign(m, false);
    bool all_small = true;
    for (std::size_t i = 0; i < m; ++i) {
      const Region& region = record.partition[i];
      record.empty[i] = region.empty();
      if (region.empty()) {
        all_small = false;
        continue;
      }
      record.grad_norms[i] = norm(cost_gradient_on_region(current.positions[i], k, d, region));
      all_small = all_small && record.grad_norms[i] < options.tol;
    }
    if (!trace.rounds.empty()) {
      const LloydRecord& prev = trace.rounds.back();
      for (std::size_t i = 0; i < m; ++i) {
        if (prev.empty[i] && !record.empty[i]) {
          trace.recoveries[i].push_back(round);
        } else if (!prev.empty[i] && record.empty[i]) {
          ++trace.oscillations[i];
        }
      }
    }
    streak = all_small ? streak + 1 : 0;
    trace.rounds.push_back(record);

    if (streak >= options.patience) {
      trace.converged = true;
      break;
    }
    if (round >= options.rounds) {
      break;
    }
    current.positions = advance(current, trace.rounds.back().partition, d, options.substeps);
  }
  trace.final_positions = current.positions;
  return trace;
}

CriticalityReport is_critical(const Configuration& c, const Density& d, double tol) {
  c.validate();
  const Partition partition = dominance_partition(c.positions, c.params);
  const CostCoeffs k = time_coeffs(c);
  CriticalityReport report;
  report.critical = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    VehicleCriticality v;
    const Region& region = partition[i];
    const VehiclePos p = c.positions[i];
    v.empty = region.empty();
    if (!v.empty) {
      v.grad_norm = norm(cost_gradient_on_region(p, k, d, region));
      if (v.grad_norm < tol && p.y > 0.0) {
        DescentOptions inner;
        inner.tol = 1e-3 * tol;
        inner.max_iter = 2000;
        const DescentResult local = optimize_on_region(p, k, d, region, inner);
        v.displacement = distance(local.optimum, p);
        v.critical = v.displacement <= tol;
      }
    }
    report.critical = report.critical && v.critical;
    report.vehicles.push_back(v);
  }
  return report;
}

StabilityReport instability_check(const Configuration& c, const Density& d,
                                  const StabilityOptions& options) {
  const CriticalityReport critical = is_critical(c, d, options.criticality_tol);
  if (!critical.critical) {
    throw PreconditionError("instability check needs a critical configuration");
  }
  const Partition partition = dominance_partition(c.positions, c.params);
  const double width = c.params.width();
  StabilityReport report;
  for (std::size_t i = 0; i < c.size(); ++i) {
    VehicleStability s;
    s.components = partition[i].components();
    if (s.components >= 2) {
      s.verdict = Stability::unstable;
      report.unstable = true;

      Configuration nudged = c;
      const double shift = c.positions[i].x + options.nudge <= width ? options.nudge
                                                                      : -options.nudge;
      nudged.positions[i].x += shift;
      LloydOptions run;
      run.rounds = options.rounds;
      run.tol = 0.0;
      run.substeps = options.substeps;
      const LloydTrace trace = lloyd_descend(nudged, d, run);
      s.perturbed = true;
      for (const LloydRecord& r : trace.rounds) {
        s.max_excursion = std::max(s.max_excursion, distance(r.positions[i], c.positions[i]));
      }
      s.max_excursion =
          std::max(s.max_excursion, distance(trace.final_positions[i], c.positions[i]));
      s.excursion_confirms = s.max_excursion > options.growth * options.nudge;
    }
    report.vehicles.push_back(s);
  }
  return report;
}

}  // namespace intercept
