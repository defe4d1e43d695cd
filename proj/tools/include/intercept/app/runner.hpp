#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "intercept/app/scenario.hpp"

namespace intercept::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitNotConverged = 4;

/// Command-line values that take precedence over the scenario file.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::size_t> svg_every;
};

struct RunOutcome {
  int exit_code = kExitOk;
  /// One-line summary on success or non-convergence; error text otherwise.
  std::string message;
};

/// Runs an already validated scenario and writes its artifacts.
RunOutcome run_scenario(const Scenario& scenario);

/// Parses, applies overrides and runs. Never throws for scenario or
/// numerical problems; they are reported through the exit code.
RunOutcome run_scenario_text(std::string_view text, const RunOverrides& overrides);
RunOutcome run_scenario_file(const std::filesystem::path& path, const RunOverrides& overrides);

}  // namespace intercept::app
