// Acceptance runner: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero if any criterion fails.

#include "property-checks.hpp"

#include "fitt/acceptance.hpp"

#include <iostream>
#include <map>

namespace {

struct Run
{
  fitt::ScenarioConfig config;
  fitt::RunResult result;
};

fitt::CheckReport
propertyReport(std::uint64_t seed)
{
  fitt::CheckReport report;
  report.criterion = 7;
  report.title = "forwarding and throttling invariants";
  for (const auto& outcome : fitt::props::runAll(seed)) {
    report.add(outcome.name, outcome.passed, outcome.detail, "holds");
  }
  return report;
}

} // namespace

int
main(int argc, char** argv)
{
  std::uint64_t seed = 1;
  if (argc > 1) {
    seed = std::stoull(argv[1]);
  }

  std::map<std::string, Run> runs;
  auto runOf = [&] (const std::string& name) -> Run& {
    auto it = runs.find(name);
    if (it == runs.end()) {
      auto config = fitt::loadScenario(name);
      config.seed = seed;
      auto result = fitt::runScenario(config);
      it = runs.emplace(name, Run{std::move(config), std::move(result)}).first;
    }
    return it->second;
  };

  std::vector<fitt::CheckReport> reports;
  {
    auto& r = runOf("fake_attack");
    reports.push_back(fitt::checkFakeSuppression(r.config, r.result));
  }
  {
    auto& r = runOf("valid_attack");
    auto report = fitt::checkReinforcement(r.config, r.result, r.config.producers.at(0).prefix);
    report.criterion = 2;
    reports.push_back(std::move(report));
  }
  {
    auto& r = runOf("mixed_attack");
    reports.push_back(fitt::checkMixedAttack(r.config, r.result));
  }
  {
    auto config = fitt::loadScenario("i1_resilience_nocache");
    config.seed = seed;
    reports.push_back(fitt::checkI1Resilience(config));
  }
  {
    auto& r = runOf("two_prefix");
    reports.push_back(fitt::checkMultiPrefix(r.config, r.result));
  }
  {
    auto& r = runOf("granularity");
    reports.push_back(fitt::checkGranularity(r.config, r.result));
  }
  reports.push_back(propertyReport(seed));
  {
    fitt::CheckReport determinism;
    determinism.criterion = 8;
    determinism.title = "identical CSV bytes for identical config and seed";
    for (const auto& name : fitt::builtinScenarioNames()) {
      auto& r = runOf(name);
      for (const auto& a : fitt::checkDeterminism(r.config, r.result).assertions) {
        determinism.add(name + ": " + a.name, a.passed, a.measured, a.expected);
      }
    }
    reports.push_back(std::move(determinism));
  }

  bool ok = true;
  for (const auto& report : reports) {
    fitt::printReport(std::cout, report);
    ok = ok && report.passed();
  }

  // edge placement around an untrusted router; not one of the numbered criteria
  auto& toy = runOf("toy_untrusted_router");
  auto extra = fitt::checkUntrustedRouter(toy.config, toy.result);
  fitt::printReport(std::cout, extra);
  ok = ok && extra.passed();

  std::cout << (ok ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << '\n';
  return ok ? 0 : 1;
}
