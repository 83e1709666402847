// Command-line front end: runs a built-in or file scenario and writes the metric CSV.

#include "fitt/acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int EXIT_USAGE = 2;

int
listScenarios()
{
  for (const auto& name : fitt::builtinScenarioNames()) {
    std::cout << name << '\n';
  }
  return 0;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"FITT discrete-event simulator"};
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;
  std::string out;
  bool check = false;
  bool list = false;
  bool printConfig = false;

  app.add_option("--scenario", scenario, "built-in scenario name or path to a JSON scenario file");
  app.add_option("--seed", seed, "RNG seed (overrides the scenario)");
  app.add_option("--duration", duration, "simulated seconds (overrides the scenario)")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "write the metric CSV here instead of stdout");
  app.add_flag("--check", check, "run the acceptance assertions of a built-in scenario");
  app.add_flag("--list", list, "list built-in scenarios and exit");
  app.add_flag("--print-config", printConfig, "print the JSON document of a built-in scenario and exit");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  if (list) {
    return listScenarios();
  }
  if (scenario.empty()) {
    std::cerr << "error: --scenario is required\n" << app.help();
    return EXIT_USAGE;
  }
  if (printConfig) {
    if (!fitt::isBuiltinScenario(scenario)) {
      std::cerr << "error: unknown built-in scenario '" << scenario << "'\n";
      return EXIT_USAGE;
    }
    std::cout << fitt::builtinScenarioJson(scenario).dump(2) << '\n';
    return 0;
  }

  fitt::ScenarioConfig config;
  try {
    config = fitt::loadScenario(scenario);
    if (seed) {
      config.seed = *seed;
    }
    if (duration) {
      config.duration = fitt::seconds(*duration);
    }
  }
  catch (const fitt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "built-in scenarios:";
    for (const auto& name : fitt::builtinScenarioNames()) {
      std::cerr << ' ' << name;
    }
    std::cerr << '\n';
    return EXIT_USAGE;
  }

  fitt::RunResult result;
  try {
    result = fitt::runScenario(config);
  }
  catch (const fitt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  }

  if (out.empty()) {
    if (!check) {
      fitt::writeCsv(std::cout, result.metrics.samples());
    }
  }
  else {
    std::ofstream file(out);
    if (!file) {
      std::cerr << "error: cannot write " << out << '\n';
      return 1;
    }
    fitt::writeCsv(file, result.metrics.samples());
  }

  if (!check) {
    return 0;
  }
  if (!fitt::isBuiltinScenario(scenario)) {
    std::cerr << "note: acceptance assertions exist only for built-in scenarios\n";
    return 0;
  }
  bool ok = true;
  for (const auto& report : fitt::checkBuiltin(config, result)) {
    fitt::printReport(std::cout, report);
    ok = ok && report.passed();
  }
  return ok ? 0 : 1;
}
