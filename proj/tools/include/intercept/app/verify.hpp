#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intercept::app {

inline constexpr std::array<std::string_view, 6> kVerifyModules{
    "density", "single_vehicle", "pursuit_games", "partition", "lloyd_solver", "cli"};

/// One property check. `measured` is the worst value observed and the check
/// passes when measured <= tolerance. Informational entries always pass.
struct Check {
  std::string module;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool informational = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Runs the property batch of one module, or of every module for "all".
/// Empty for an unknown selector.
std::optional<VerifyReport> verify(std::string_view selector, std::uint64_t seed);

}  // namespace intercept::app
