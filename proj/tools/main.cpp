#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "extbayes/scenario.hpp"

namespace {

int run(const std::string& command, const std::string& path,
        const extbayes::CommandOptions& options) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "cannot read scenario file '" << path << "'\n";
    return 2;
  }
  std::ostringstream content;
  content << file.rdbuf();

  const extbayes::CommandResult result =
      extbayes::run_command(command, content.str(), options);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "extbayes: exact checking, construction and certification of "
      "extended-Bayesian belief updates"};
  app.require_subcommand(1);

  extbayes::CommandOptions options;
  std::string scenario_path;
  std::uint64_t seed = 0;
  bool seed_given = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario_path, "scenario JSON file")
        ->required();
    sub->add_option("--format", options.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--vertex-cap", options.vertex_cap,
                    "cap on extension-vertex enumeration");
    sub->add_option("--seed", seed, "seed for randomized demo subcommands")
        ->each([&](const std::string&) { seed_given = true; });
    return sub;
  };

  add_common(app.add_subcommand(
      "check", "classify the period 0 -> 1 update (or GEB expansion)"));
  add_common(app.add_subcommand(
      "witness", "construct and verify the interim witness measure"));
  add_common(app.add_subcommand(
      "chain", "all pairwise classifications plus the common witness"));
  CLI::App* bounds = add_common(app.add_subcommand(
      "bounds", "inner/outer conditional probability over all extensions"));
  std::string given_text;
  std::string target_text;
  bounds->add_option("--given", given_text, "conditioning event or formula")
      ->required();
  bounds->add_option("--target", target_text, "target event or formula")
      ->required();
  add_common(app.add_subcommand("prefs", "extension-consistency report"));
  add_common(app.add_subcommand(
      "compile", "emit the state-based scenario derived from this one"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub->get_name() == "bounds") {
    options.given = given_text;
    options.target = target_text;
  }
  if (seed_given) options.seed = seed;

  return run(sub->get_name(), scenario_path, options);
}
