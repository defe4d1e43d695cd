#pragma once

#include <cstddef>
#include <vector>

#include "intercept/cost.hpp"
#include "intercept/density.hpp"
#include "intercept/partition.hpp"
#include "intercept/vec2.hpp"

namespace intercept {

/// Vehicle locations plus game parameters. Locations must be pairwise
/// distinct and lie in the closed upper half-plane.
struct Configuration {
  std::vector<VehiclePos> positions;
  GameParams params;

  std::size_t size() const { return positions.size(); }
  /// Throws DomainError or CoincidentVehiclesError on a malformed configuration.
  void validate() const;
};

/// Sum over vehicles of the expected time over their dominance regions.
double expected_time_multi(const Configuration& c, const Density& d);

/// Expected value of min_i T(p_i, x), integrated pointwise without building
/// the partition. Cross-check for expected_time_multi.
double expected_time_pointwise_min(const Configuration& c, const Density& d);

/// Gradient of the expected time in p_i: the integral of dT/dp_i over the
/// dominance region of vehicle i. Throws EmptyRegionError for an empty
/// region and SingularityError when Y_i = 0 with X_i inside the region.
Gradient region_gradient(const Configuration& c, std::size_t i, const Density& d);

/// One synchronous unit-time round. Vehicles with empty regions drop by
/// min(1, Y); the others follow p' = -sat(region gradient) with their
/// regions frozen at the start of the round, integrated by classical RK4.
Configuration lloyd_round(const Configuration& c, const Density& d, int substeps = 64);

struct LloydOptions {
  std::size_t rounds = 500;
  double tol = 1e-6;
  int substeps = 64;
  /// Consecutive rounds with every region non-empty and every gradient norm
  /// below tol needed to declare convergence.
  std::size_t patience = 3;
};

/// State at the start of one round.
struct LloydRecord {
  std::size_t round = 0;
  std::vector<VehiclePos> positions;
  Partition partition;
  double expected_time = 0.0;
  /// Zero for vehicles with empty regions.
  std::vector<double> grad_norms;
  std::vector<bool> empty;
};

struct LloydTrace {
  std::vector<LloydRecord> rounds;
  std::vector<VehiclePos> final_positions;
  bool converged = false;
  /// Per vehicle: rounds at which an empty region became non-empty.
  std::vector<std::vector<std::size_t>> recoveries;
  /// Per vehicle: number of non-empty -> empty transitions.
  std::vector<std::size_t> oscillations;

  double max_grad_norm(std::size_t round) const;
};

/// Repeats lloyd_round until convergence or options.rounds rounds.
LloydTrace lloyd_descend(const Configuration& start, const Density& d,
                         const LloydOptions& options = {});

struct VehicleCriticality {
  bool empty = false;
  double grad_norm = 0.0;
  /// Distance from p_i to the minimizer of its frozen-region cost.
  double displacement = 0.0;
  bool critical = false;
};

struct CriticalityReport {
  bool critical = false;
  std::vector<VehicleCriticality> vehicles;
};

/// Each vehicle must sit at the minimizer of its own frozen-region expected
/// time: gradient norm below tol, and a descent on that cost started at p_i
/// must not move it farther than tol.
CriticalityReport is_critical(const Configuration& c, const Density& d, double tol);

enum class Stability { stable_candidate, unstable };

struct VehicleStability {
  Stability verdict = Stability::stable_candidate;
  std::size_t components = 0;
  /// Perturbation run (disconnected regions only): largest distance of the
  /// nudged vehicle from its critical location.
  bool perturbed = false;
  double max_excursion = 0.0;
  bool excursion_confirms = false;
};

struct StabilityOptions {
  double criticality_tol = 1e-5;
  double nudge = 1e-4;
  std::size_t rounds = 100;
  double growth = 10.0;
  int substeps = 64;
};

struct StabilityReport {
  bool unstable = false;
  std::vector<VehicleStability> vehicles;
};

/// A critical configuration in which some vehicle owns a disconnected
/// region is unstable. For each such vehicle the check also nudges it by
/// options.nudge in X and runs the descent, confirming that it drifts more
/// than growth * nudge away. Throws PreconditionError if c is not critical.
StabilityReport instability_check(const Configuration& c, const Density& d,
                                  const StabilityOptions& options = {});

}  // namespace intercept
