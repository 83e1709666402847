#include "fitt/scheduler.hpp"

namespace fitt {

EventId
Scheduler::schedule(Time at, Callback cb)
{
  if (at < m_now) {
    throw std::logic_error("cannot schedule an event in the past");
  }
  EventId id = m_nextSeq++;
  m_queue.push(Event{at, id, std::move(cb)});
  m_live.insert(id);
  return id;
}

void
Scheduler::cancel(EventId id)
{
  if (m_live.count(id) > 0) {
    m_cancelled.insert(id);
  }
}

void
Scheduler::runUntil(Time end)
{
  if (end < m_now) {
    throw std::logic_error("runUntil target is in the past");
  }
  while (!m_queue.empty() && m_queue.top().at <= end) {
    // priority_queue::top is const; the callback is moved out before pop
    Event ev = std::move(const_cast<Event&>(m_queue.top()));
    m_queue.pop();
    m_live.erase(ev.seq);
    if (m_cancelled.erase(ev.seq) > 0) {
      continue;
    }
    m_now = ev.at;
    ++m_executed;
    ev.cb();
  }
  m_now = end;
}

} // namespace fitt
