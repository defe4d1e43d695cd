#pragma once

#include <span>
#include <string>

#include "intercept/density.hpp"
#include "intercept/lloyd.hpp"
#include "intercept/partition.hpp"
#include "intercept/pursuit.hpp"
#include "intercept/single_vehicle.hpp"

namespace intercept {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

/// [{"vehicle": i, "intervals": [[lo, hi], ...]}, ...] with 1-based i.
std::string partition_json(const Partition& partition);

/// Columns: round,vehicle,x,y,grad_norm,region_length,expected_time.
std::string lloyd_trace_csv(const LloydTrace& trace);

/// [{"round": r, "regions": <partition_json array>}, ...].
std::string lloyd_partitions_json(const LloydTrace& trace);

/// Columns: t,px,py,ex,ey.
std::string pursuit_trace_csv(const PursuitTrace& trace);

/// Columns: iteration,x,y,cost.
std::string descent_trace_csv(const DescentResult& result);

/// 800x400 SVG of the generator, the density profile, the vehicles and their
/// color-coded dominance regions, mapping [0, W] x [0, 1.2 max Y].
std::string snapshot_svg(std::span<const VehiclePos> positions, const Partition& partition,
                         const Density& density, const std::string& title = {});

}  // namespace intercept
