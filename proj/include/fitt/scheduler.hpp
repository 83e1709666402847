#ifndef FITT_SCHEDULER_HPP
#define FITT_SCHEDULER_HPP

#include "fitt/common.hpp"

#include <functional>
#include <queue>
#include <unordered_set>
#include <vector>

namespace fitt {

using EventId = std::uint64_t;

/**
 * \brief Deterministic discrete-event queue.
 *
 * Events fire in (time, sequence) order; equal timestamps run in scheduling order.
 */
class Scheduler
{
public:
  using Callback = std::function<void()>;

  Time
  now() const
  {
    return m_now;
  }

  /// Schedules \p cb at absolute time \p at. Throws std::logic_error if \p at is in the past.
  EventId
  schedule(Time at, Callback cb);

  EventId
  scheduleAfter(Time delay, Callback cb)
  {
    return schedule(m_now + delay, std::move(cb));
  }

  /// Cancelling an event that already fired is a no-op.
  void
  cancel(EventId id);

  /// Executes every event with fire time <= \p end, then advances the clock to \p end.
  void
  runUntil(Time end);

  size_t
  pendingCount() const
  {
    return m_queue.size() - m_cancelled.size();
  }

  std::uint64_t
  executedCount() const
  {
    return m_executed;
  }

private:
  struct Event
  {
    Time at;
    EventId seq;
    Callback cb;
  };

  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const
    {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  Time m_now{0};
  EventId m_nextSeq = 0;
  std::uint64_t m_executed = 0;
  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  std::unordered_set<EventId> m_cancelled;
  std::unordered_set<EventId> m_live;
};

} // namespace fitt

#endif // FITT_SCHEDULER_HPP
