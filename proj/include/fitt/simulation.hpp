#ifndef FITT_SIMULATION_HPP
#define FITT_SIMULATION_HPP

#include "fitt/fitt-strategy.hpp"
#include "fitt/metrics.hpp"
#include "fitt/scenario.hpp"

#include <memory>
#include <unordered_map>

namespace fitt {

/// Throttle state change at one router face.
struct ThrottleLogEntry
{
  std::string node;
  /// Node on the other end of the throttled face.
  std::string peer;
  ThrottleEvent event;
};

struct NackLogEntry
{
  Time time;
  std::string producer;
  Name pref;
  NackReason reason;
  Rate capacity;
  size_t fakeCount;
};

struct RunResult
{
  std::string scenario;
  std::uint64_t seed = 0;
  Time duration{0};
  MetricTable metrics;
  std::vector<ThrottleLogEntry> throttleLog;
  std::vector<NackLogEntry> nackLog;
  std::uint64_t eventsExecuted = 0;
};

/**
 * \brief One run of a scenario over the discrete-event scheduler.
 *
 * Routers get a forwarder (and a FITT strategy when enabled); producers, consumers and
 * attackers are endpoints whose applications sit directly on their access link.
 */
class Simulation
{
public:
  explicit
  Simulation(ScenarioConfig config);

  ~Simulation();

  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Runs to the configured duration; may be called once.
  RunResult
  run();

  const ScenarioConfig&
  config() const
  {
    return m_config;
  }

  Scheduler&
  scheduler()
  {
    return m_scheduler;
  }

  /// Forwarder of a router; nullptr for endpoints and unknown ids.
  Forwarder*
  forwarder(const std::string& node);

  /// FITT strategy of a router; nullptr when the router runs without FITT.
  FittStrategy*
  strategy(const std::string& node);

  /// Face of \p node leading to \p peer, or INVALID_FACE.
  FaceId
  faceToward(const std::string& node, const std::string& peer) const;

  struct Node;
  struct App;
  struct Link;

private:
  void
  buildNodes();

  void
  buildLinks();

  void
  computeRoutes();

  void
  buildApps();

  void
  send(size_t node, FaceId face, Packet packet);

  void
  deliver(size_t node, FaceId face, const Packet& packet);

  void
  deliverToEndpoint(size_t node, FaceId face, const Packet& packet);

  void
  emit(size_t app);

  void
  repace(size_t app);

  void
  producerTick(size_t node);

  void
  flushBin(size_t bin);

private:
  ScenarioConfig m_config;
  Scheduler m_scheduler;
  MetricRecorder m_metrics;
  std::vector<std::unique_ptr<Node>> m_nodes;
  std::unordered_map<std::string, size_t> m_index;
  std::vector<std::unique_ptr<App>> m_apps;
  std::vector<Link> m_links;
  /// Ground truth about each emitted Interest, keyed by nonce; never visible to routers.
  std::unordered_map<std::uint64_t, bool> m_isAttack;
  std::vector<ThrottleLogEntry> m_throttleLog;
  std::vector<NackLogEntry> m_nackLog;
  bool m_ran = false;
};

/// Convenience wrapper: builds a simulation for \p config and runs it.
RunResult
runScenario(const ScenarioConfig& config);

} // namespace fitt

#endif // FITT_SIMULATION_HPP
