#include "intercept/export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace intercept {

namespace {

nlohmann::json regions_json(const Partition& partition) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < partition.size(); ++i) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const Interval& iv : partition[i].intervals()) {
      intervals.push_back({iv.lo, iv.hi});
    }
    out.push_back({{"vehicle", i + 1}, {"intervals", std::move(intervals)}});
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

std::string partition_json(const Partition& partition) {
  return regions_json(partition).dump(2) + "\n";
}

std::string lloyd_trace_csv(const LloydTrace& trace) {
  std::ostringstream out;
  out << "round,vehicle,x,y,grad_norm,region_length,expected_time\n";
  for (const LloydRecord& r : trace.rounds) {
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
      out << r.round << ',' << i + 1 << ',' << format_number(r.positions[i].x) << ','
          << format_number(r.positions[i].y) << ',' << format_number(r.grad_norms[i]) << ','
          << format_number(r.partition[i].length()) << ',' << format_number(r.expected_time)
          << '\n';
    }
  }
  return out.str();
}

std::string lloyd_partitions_json(const LloydTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const LloydRecord& r : trace.rounds) {
    out.push_back({{"round", r.round}, {"regions", regions_json(r.partition)}});
  }
  return out.dump(2) + "\n";
}

std::string pursuit_trace_csv(const PursuitTrace& trace) {
  std::ostringstream out;
  out << "t,px,py,ex,ey\n";
  for (std::size_t s = 0; s < trace.pursuer.size(); ++s) {
    out << format_number(trace.time_at(s)) << ',' << format_number(trace.pursuer[s].x) << ','
        << format_number(trace.pursuer[s].y) << ',' << format_number(trace.evader[s].x) << ','
        << format_number(trace.evader[s].y) << '\n';
  }
  return out.str();
}

std::string descent_trace_csv(const DescentResult& result) {
  std::ostringstream out;
  out << "iteration,x,y,cost\n";
  for (std::size_t s = 0; s < result.trace.size(); ++s) {
    const DescentStep& step = result.trace[s];
    out << s << ',' << format_number(step.position.x) << ',' << format_number(step.position.y)
        << ',' << format_number(step.cost) << '\n';
  }
  return out.str();
}

std::string snapshot_svg(std::span<const VehiclePos> positions, const Partition& partition,
                         const Density& density, const std::string& title) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 40.0;
  const double w = density.width();
  double max_y = 0.0;
  for (const VehiclePos& p : positions) {
    max_y = std::max(max_y, p.y);
  }
  const double top = max_y > 0.0 ? 1.2 * max_y : 1.0;
  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;
  auto sx = [&](double x) { return kMargin + plot_w * x / w; };
  auto sy = [&](double y) { return kHeight - kMargin - plot_h * y / top; };
  const double base = sy(0.0);

  std::ostringstream out;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="800" height="400" viewBox="0 0 800 400">)"
      << '\n';
  out << R"(<rect width="800" height="400" fill="white"/>)" << '\n';
  if (!title.empty()) {
    out << R"(<text x="40" y="24" font-family="sans-serif" font-size="14">)" << title
        << "</text>\n";
  }

  // Density profile scaled to a quarter of the plot height.
  const double peak = density.bound() > 0.0 ? density.bound() : 1.0;
  out << R"(<polyline fill="none" stroke="black" stroke-width="1" points=")";
  for (const Density::Breakpoint& bp : density.breakpoints()) {
    out << format_number(sx(bp.x)) << ',' << format_number(base - 0.25 * plot_h * bp.value / peak)
        << ' ';
  }
  out << "\"/>\n";

  out << R"(<line x1=")" << format_number(sx(0.0)) << R"(" y1=")" << format_number(base)
      << R"(" x2=")" << format_number(sx(w)) << R"(" y2=")" << format_number(base)
      << R"(" stroke="gray" stroke-width="1"/>)" << '\n';

  for (std::size_t i = 0; i < partition.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    for (const Interval& iv : partition[i].intervals()) {
      out << R"(<line x1=")" << format_number(sx(iv.lo)) << R"(" y1=")" << format_number(base)
          << R"(" x2=")" << format_number(sx(iv.hi)) << R"(" y2=")" << format_number(base)
          << R"(" stroke=")" << color << R"(" stroke-width="6"/>)" << '\n';
    }
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    out << R"(<circle cx=")" << format_number(sx(positions[i].x)) << R"(" cy=")"
        << format_number(sy(positions[i].y)) << R"(" r="6" fill=")" << color << R"("/>)"
        << '\n';
    out << R"(<text x=")" << format_number(sx(positions[i].x) + 8.0) << R"(" y=")"
        << format_number(sy(positions[i].y) - 8.0)
        << R"(" font-family="sans-serif" font-size="12">)" << i + 1 << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace intercept
