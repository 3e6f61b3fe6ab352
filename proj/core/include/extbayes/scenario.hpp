#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extbayes/decision.hpp"
#include "extbayes/logic.hpp"

namespace extbayes {

// A parsed scenario file. State-based scenarios carry a chain directly;
// propositional ones are compiled onto the valuation space; expansion
// scenarios carry the (prior, expanded posterior) pair for GEB.
struct LoadedScenario {
  std::optional<Chain> chain;
  // Set when `expansion_states` is present: prior over the original space,
  // posterior over the expanded space.
  std::optional<std::pair<Measure, Measure>> geb;
  bool propositional = false;
  std::vector<std::string> props;  // when propositional
  std::optional<UtilityIndex> utility;
};

// Parses and validates scenario JSON. Throws ScenarioError (or the specific
// engine error) on malformed input.
LoadedScenario load_scenario(const std::string& json_text);

// Resolves a --given/--target argument: a formula for propositional
// scenarios, a comma-separated list of state labels otherwise.
Event parse_event_spec(const LoadedScenario& scenario, const std::string& text);

struct CommandOptions {
  std::string format = "text";  // "text" or "json"
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::optional<std::string> given;
  std::optional<std::string> target;
  std::optional<std::uint64_t> seed;
};

struct CommandResult {
  // 0 = property holds, 1 = property fails, 2 = input error,
  // 3 = resource cap exceeded.
  int exit_code = 0;
  std::string output;       // report, for standard output
  std::string diagnostics;  // errors, for standard error
};

// Dispatches one CLI command (check, witness, chain, bounds, prefs, compile)
// against raw scenario text. Never throws; failures map to exit codes.
CommandResult run_command(const std::string& command,
                          const std::string& scenario_text,
                          const CommandOptions& options);

}  // namespace extbayes
