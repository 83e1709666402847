#ifndef FITT_FORWARDER_HPP
#define FITT_FORWARDER_HPP

#include "fitt/content-store.hpp"
#include "fitt/fib.hpp"
#include "fitt/packets.hpp"
#include "fitt/pit.hpp"
#include "fitt/scheduler.hpp"

#include <array>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

namespace fitt {

enum class Counter : std::uint8_t {
  InterestsIn,
  InterestsOut,
  InterestsAggregated,
  DataIn,
  DataOut,
  CsHit,
  PitExpiry,
  NackIn,
  NackOut,
  DropUnroutable,
  DropThrottled,
  DropUnsolicited,
  DropInvalidNack,
  DropLoop,
  NackIgnored,
  COUNT_
};

const char*
toString(Counter c);

/**
 * \brief Per-(face, FITT prefix, counter) packet counts, drained once per metric bin.
 */
class CounterTable
{
public:
  struct Row
  {
    FaceId face;
    std::string prefix; // "-" when no FITT prefix matched
    Counter counter;
    std::uint64_t value;
  };

  void
  increment(FaceId face, const Name* prefix, Counter counter);

  /// Returns every non-zero count accumulated since the previous drain and resets them.
  std::vector<Row>
  drain();

  std::uint64_t
  total(Counter counter) const
  {
    return m_totals[static_cast<size_t>(counter)];
  }

private:
  std::unordered_map<std::string, std::uint32_t> m_prefixIds{{"-", 0}};
  std::vector<std::string> m_prefixes{"-"};
  std::unordered_map<std::uint64_t, std::uint64_t> m_current;
  std::array<std::uint64_t, static_cast<size_t>(Counter::COUNT_)> m_totals{};
};

/**
 * \brief Hook through which a forwarding strategy admits Interests and reacts to NACKs.
 */
class Strategy
{
public:
  virtual
  ~Strategy() = default;

  /// Pipeline step (1); returning false drops the Interest before any table lookup.
  virtual bool
  admitInterest(FaceId face, const Name& name, Time now) = 0;

  virtual bool
  validateNack(FaceId face, const Nack& nack) const = 0;

  /// Processes a validated NACK and returns the NACKs to send, one per downstream face.
  virtual std::vector<std::pair<FaceId, Nack>>
  handleNack(FaceId face, const Nack& nack, Time now) = 0;

  /// Most specific prefix under active reaction that covers \p name, if any.
  virtual const Name*
  matchedPrefix(const Name& name) const = 0;
};

struct ForwarderOptions
{
  Time pitLifetime = seconds(2);
  size_t csCapacity = 0;
};

/**
 * \brief NDN forwarding plane of one node: FIB, PIT, CS and the receive pipelines.
 *
 * Interest pipeline order: strategy admission, CS lookup, PIT aggregation, FIB forwarding
 * to the first next hop.
 */
class Forwarder
{
public:
  using SendFn = std::function<void(FaceId, Packet)>;

  Forwarder(Scheduler& scheduler, ForwarderOptions options, SendFn send);

  Forwarder(const Forwarder&) = delete;
  Forwarder& operator=(const Forwarder&) = delete;

  void
  setStrategy(std::unique_ptr<Strategy> strategy)
  {
    m_strategy = std::move(strategy);
  }

  Strategy*
  strategy() const
  {
    return m_strategy.get();
  }

  void
  receiveInterest(FaceId face, const Interest& interest);

  void
  receiveData(FaceId face, const Data& data);

  void
  receiveNack(FaceId face, const Nack& nack);

  void
  sendNack(FaceId face, Nack nack);

  Fib&
  fib()
  {
    return m_fib;
  }

  const Fib&
  fib() const
  {
    return m_fib;
  }

  const Pit&
  pit() const
  {
    return m_pit;
  }

  ContentStore&
  cs()
  {
    return m_cs;
  }

  CounterTable&
  counters()
  {
    return m_counters;
  }

  const CounterTable&
  counters() const
  {
    return m_counters;
  }

  const ForwarderOptions&
  options() const
  {
    return m_options;
  }

  Scheduler&
  scheduler()
  {
    return m_scheduler;
  }

private:
  void
  onPitExpiry(const Name& name);

  const Name*
  matchedPrefix(const Name& name) const
  {
    return m_strategy ? m_strategy->matchedPrefix(name) : nullptr;
  }

private:
  Scheduler& m_scheduler;
  ForwarderOptions m_options;
  SendFn m_send;
  Fib m_fib;
  Pit m_pit;
  ContentStore m_cs;
  CounterTable m_counters;
  std::unique_ptr<Strategy> m_strategy;
};

} // namespace fitt

#endif // FITT_FORWARDER_HPP
