#ifndef FITT_ACCEPTANCE_HPP
#define FITT_ACCEPTANCE_HPP

#include "fitt/simulation.hpp"

#include <ostream>

namespace fitt {

/// One measured-vs-expected comparison.
struct Assertion
{
  std::string name;
  bool passed;
  std::string measured;
  std::string expected;
};

struct CheckReport
{
  int criterion = 0;
  std::string title;
  std::vector<Assertion> assertions;

  bool
  passed() const;

  void
  add(std::string name, bool ok, std::string measured, std::string expected);
};

void
printReport(std::ostream& os, const CheckReport& report);

/// Sum of the configured rates of every consumer targeting \p prefix.
Rate
configuredLegitRate(const ScenarioConfig& config, const Name& prefix);

/// Hosts of attack applications aimed at \p prefix.
std::vector<std::string>
attackerNodes(const ScenarioConfig& config, const Name& prefix);

/// Hosts of consumer applications aimed at \p prefix.
std::vector<std::string>
legitNodes(const ScenarioConfig& config, const Name& prefix);

/// Fake-attack suppression after the first victim NACK.
CheckReport
checkFakeSuppression(const ScenarioConfig& config, const RunResult& run);

/// Halving steps, blocking deadline, legitimate recovery and final share for one victim prefix.
CheckReport
checkReinforcement(const ScenarioConfig& config, const RunResult& run, const Name& prefix);

/// Fake streams blocked at once, limits combine by minimum, reinforcement still converges.
CheckReport
checkMixedAttack(const ScenarioConfig& config, const RunResult& run);

/// Aggregation and caching ordering without FITT; runs the extra variants it needs.
CheckReport
checkI1Resilience(const ScenarioConfig& noCache);

/// Each reaction converges and matches a run where only its own attack happens.
CheckReport
checkMultiPrefix(const ScenarioConfig& config, const RunResult& run);

/// The second prefix keeps its no-attack receive rate.
CheckReport
checkGranularity(const ScenarioConfig& config, const RunResult& run);

/// Pushback stops at the untrusted router, whose upstream face is throttled instead.
CheckReport
checkUntrustedRouter(const ScenarioConfig& config, const RunResult& run);

/// Two runs of the same config produce identical CSV bytes.
CheckReport
checkDeterminism(const ScenarioConfig& config, const RunResult& first);

/// The checks belonging to a built-in scenario, given its run.
std::vector<CheckReport>
checkBuiltin(const ScenarioConfig& config, const RunResult& run);

std::string
toCsv(const RunResult& run);

} // namespace fitt

#endif // FITT_ACCEPTANCE_HPP
