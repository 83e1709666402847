#ifndef FITT_SCENARIO_HPP
#define FITT_SCENARIO_HPP

#include "fitt/apps.hpp"
#include "fitt/topology.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fitt {

class ScenarioError : public Error
{
public:
  using Error::Error;
};

struct TimerConfig
{
  Time pitLifetime = seconds(2);
  Time revertTimer = seconds(5);
  Time rateLimitTimer = seconds(3);
};

struct FittConfig
{
  /// When false every router is a plain NDN forwarder.
  bool enabled = true;
  double complianceTolerance = 0.05;
  Rate blacklistFloor = 1.0;
  bool keepBlacklistOnRevert = false;
};

struct ScenarioConfig
{
  std::string name;
  TopologySpec topology;
  std::vector<ProducerConfig> producers;
  std::vector<ConsumerConfig> consumers;
  std::vector<AttackSpec> attacks;
  TimerConfig timers;
  FittConfig fitt;
  size_t csCapacity = 0;
  Time duration = seconds(30);
  std::uint64_t seed = 1;
  Time metricBin = seconds(1);
};

/// Parses and validates a scenario document; errors name the offending field path.
ScenarioConfig
parseScenario(const nlohmann::json& doc);

std::vector<std::string>
builtinScenarioNames();

bool
isBuiltinScenario(std::string_view name);

/// The scenario document behind a built-in; throws ScenarioError for unknown names.
nlohmann::json
builtinScenarioJson(std::string_view name);

/// Resolves a built-in name, otherwise reads a JSON scenario file.
ScenarioConfig
loadScenario(std::string_view nameOrPath);

/// Node ids matched by a selector, in topology order.
std::vector<std::string>
resolveSelector(const TopologySpec& topology, const NodeSelector& where);

} // namespace fitt

#endif // FITT_SCENARIO_HPP
