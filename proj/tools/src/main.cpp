#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "intercept/app/runner.hpp"
#include "intercept/app/verify.hpp"

int main(int argc, char** argv) {
  using namespace intercept::app;

  CLI::App app{"Placement of intercepting vehicles for targets leaving a segment"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string out;
  std::size_t svg_every = 0;
  app.add_option("--seed", seed, "Seed for randomized positions and property checks");
  app.add_option("--out", out, "Output directory (overrides the scenario)");
  app.add_option("--svg-every", svg_every, "Write an SVG snapshot every k Lloyd rounds");

  std::string scenario_path;
  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", scenario_path, "Scenario JSON")->required();

  std::string selector;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the property checks");
  verify_cmd->add_option("selector", selector, "Module name or \"all\"")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    RunOverrides overrides;
    if (app.count("--seed") > 0) {
      overrides.seed = seed;
    }
    if (app.count("--out") > 0) {
      overrides.output = out;
    }
    if (app.count("--svg-every") > 0) {
      overrides.svg_every = svg_every;
    }
    const RunOutcome outcome = run_scenario_file(scenario_path, overrides);
    (outcome.exit_code == kExitOk || outcome.exit_code == kExitNotConverged ? std::cout
                                                                            : std::cerr)
        << outcome.message << "\n";
    return outcome.exit_code;
  }

  const std::uint64_t verify_seed = app.count("--seed") > 0 ? seed : 1;
  const auto report = verify(selector, verify_seed);
  if (!report) {
    std::cerr << "unknown selector \"" << selector << "\"; expected all";
    for (std::string_view name : kVerifyModules) {
      std::cerr << ", " << name;
    }
    std::cerr << "\n";
    return kExitSchema;
  }
  const std::string text = report->to_json();
  if (app.count("--out") > 0) {
    std::filesystem::create_directories(out);
    std::ofstream file(std::filesystem::path(out) / "verify_report.json");
    file << text << "\n";
  }
  std::cout << text << "\n";
  for (const Check& c : report->checks) {
    if (!c.passed) {
      std::cerr << "FAIL " << c.module << "." << c.name << " measured " << c.measured
                << " > " << c.tolerance << "\n";
    }
  }
  return report->passed() ? kExitOk : kExitFailure;
}
