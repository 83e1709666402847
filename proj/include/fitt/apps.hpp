#ifndef FITT_APPS_HPP
#define FITT_APPS_HPP

#include "fitt/packets.hpp"

#include <deque>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fitt {

using Rng = std::mt19937_64;

struct ProducerConfig
{
  std::string node;
  Name prefix;
  /// Prefix installed in routers' FIBs; defaults to prefix.
  std::optional<Name> announce;
  Rate capacity = 1500;
  /// Static Data names are prefix/0 .. prefix/(n-1).
  std::uint64_t staticNameCount = 500;
  Time freshness = seconds(4);
  Time fakeReportInterval = seconds(1);
  Time nackRefreshInterval = seconds(1);
  Time rateWindow = seconds(1);

  const Name&
  routePrefix() const
  {
    return announce ? *announce : prefix;
  }
};

/**
 * \brief Victim-side logic: answers Interests, detects fake ones and reports overload.
 */
class Producer
{
public:
  enum class Verdict {
    STATIC_DATA,
    DYNAMIC_DATA,
    FAKE_DETECTED,
    OUT_OF_PREFIX,
  };

  struct Reply
  {
    Verdict verdict;
    std::optional<Data> data;
  };

  explicit
  Producer(ProducerConfig config);

  const ProducerConfig&
  config() const
  {
    return m_config;
  }

  Reply
  onInterest(const Interest& interest, Time now);

  /// Periodic report: at most one FAKE and one VALID NACK.
  std::vector<Nack>
  tick(Time now);

  /// Valid Interests per second over the trailing rate window.
  Rate
  validRate(Time now);

  const std::vector<Name>&
  pendingFakeNames() const
  {
    return m_fakeWindow;
  }

private:
  bool
  isStaticName(const Name& name) const;

private:
  ProducerConfig m_config;
  std::vector<Name> m_fakeWindow;
  std::deque<Time> m_validArrivals;
  std::optional<Time> m_lastFakeNack;
  std::optional<Time> m_lastValidNack;
};

enum class TrafficClass {
  I1,
  I3,
};

enum class AttackKind {
  I1,
  I2,
  I3,
  MIXED,
};

const char*
toString(AttackKind kind);

AttackKind
parseAttackKind(const std::string& text);

TrafficClass
parseTrafficClass(const std::string& text);

/// Chooses where an application runs: one node, or a [begin, end) slice of a group.
struct NodeSelector
{
  std::string node;
  std::string group;
  size_t begin = 0;
  size_t end = static_cast<size_t>(-1);
};

struct ConsumerConfig
{
  NodeSelector where;
  Name prefix;
  Rate rate = 40;
  TrafficClass trafficClass = TrafficClass::I3;
  std::uint64_t nameUniverse = 500;
  Time start{0};
  std::optional<Time> stop;
  /// Legitimate clients obey NACKs; non-compliant ones ignore them.
  bool compliant = true;
  /// Linear ramp back to the configured rate once a throttle is lifted.
  std::optional<Time> rampWindow;
};

struct AttackSpec
{
  NodeSelector where;
  AttackKind kind = AttackKind::I2;
  Rate rate = 100;
  Name targetPrefix;
  std::uint64_t nameUniverse = 500;
  Time start{0};
  std::optional<Time> stop;
};

/**
 * \brief Sending-rate state of a consumer, including its reaction to NACKs.
 */
class ConsumerRate
{
public:
  ConsumerRate(Name prefix, Rate configured, bool compliant, Time rampWindow);

  Rate
  current(Time now) const;

  /// Applies a NACK; returns true if the rate changed.
  bool
  onNack(const Nack& nack, Time now);

private:
  Name m_prefix;
  Rate m_configured;
  bool m_compliant;
  Time m_rampWindow;
  Rate m_rate;
  // ramp from m_rampFrom at m_rampStart to m_configured at m_rampStart + m_rampWindow
  std::optional<Time> m_rampStart;
  Rate m_rampFrom = 0;
};

/**
 * \brief Name generator for the I-1, I-2 and I-3 taxonomy plus the mixed stream.
 *
 * \p tag makes I-3 names unique across generators.
 */
class AttackNameGenerator
{
public:
  AttackNameGenerator(AttackKind kind, Name target, std::uint64_t universe, std::string tag);

  Interest
  next(Rng& rng);

private:
  AttackKind m_kind;
  Name m_target;
  std::uint64_t m_universe;
  std::string m_tag;
  std::uint64_t m_counter = 0;
};

/// One Interest of the given class toward \p prefix; used by legitimate consumers.
Interest
makeConsumerInterest(TrafficClass cls, const Name& prefix, std::uint64_t universe, const std::string& tag,
                     std::uint64_t& counter, Rng& rng);

/// Gap to the next emission at \p rate with +-10% uniform jitter.
Time
jitteredGap(Rate rate, Rng& rng);

} // namespace fitt

#endif // FITT_APPS_HPP
