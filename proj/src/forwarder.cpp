#include "fitt/forwarder.hpp"

#include <algorithm>

namespace fitt {

const char*
toString(Counter c)
{
  switch (c) {
    case Counter::InterestsIn: return "interests_in";
    case Counter::InterestsOut: return "interests_out";
    case Counter::InterestsAggregated: return "interests_aggregated";
    case Counter::DataIn: return "data_in";
    case Counter::DataOut: return "data_out";
    case Counter::CsHit: return "cs_hit";
    case Counter::PitExpiry: return "pit_expiry";
    case Counter::NackIn: return "nack_in";
    case Counter::NackOut: return "nack_out";
    case Counter::DropUnroutable: return "dropped_unroutable";
    case Counter::DropThrottled: return "dropped_throttled";
    case Counter::DropUnsolicited: return "dropped_unsolicited";
    case Counter::DropInvalidNack: return "dropped_invalid_nack";
    case Counter::DropLoop: return "dropped_loop";
    case Counter::NackIgnored: return "nack_ignored";
    case Counter::COUNT_: break;
  }
  return "?";
}

void
CounterTable::increment(FaceId face, const Name* prefix, Counter counter)
{
  std::uint32_t prefixId = 0;
  if (prefix != nullptr) {
    auto uri = prefix->toUri();
    auto [it, isNew] = m_prefixIds.try_emplace(uri, static_cast<std::uint32_t>(m_prefixes.size()));
    if (isNew) {
      m_prefixes.push_back(uri);
    }
    prefixId = it->second;
  }
  // face:32 | prefix:24 | counter:8
  std::uint64_t key = (static_cast<std::uint64_t>(face) << 32) |
                      (static_cast<std::uint64_t>(prefixId) << 8) |
                      static_cast<std::uint64_t>(counter);
  ++m_current[key];
  ++m_totals[static_cast<size_t>(counter)];
}

std::vector<CounterTable::Row>
CounterTable::drain()
{
  std::vector<Row> rows;
  rows.reserve(m_current.size());
  for (const auto& [key, value] : m_current) {
    rows.push_back(Row{static_cast<FaceId>(key >> 32),
                       m_prefixes[(key >> 8) & 0xFFFFFF],
                       static_cast<Counter>(key & 0xFF),
                       value});
  }
  m_current.clear();
  return rows;
}

Forwarder::Forwarder(Scheduler& scheduler, ForwarderOptions options, SendFn send)
  : m_scheduler(scheduler)
  , m_options(options)
  , m_send(std::move(send))
  , m_cs(options.csCapacity)
{
}

void
Forwarder::receiveInterest(FaceId face, const Interest& interest)
{
  const Time now = m_scheduler.now();
  const Name* pref = matchedPrefix(interest.name);
  m_counters.increment(face, pref, Counter::InterestsIn);

  if (m_strategy && !m_strategy->admitInterest(face, interest.name, now)) {
    m_counters.increment(face, pref, Counter::DropThrottled);
    return;
  }

  if (auto data = m_cs.find(interest.name, now)) {
    m_counters.increment(face, pref, Counter::CsHit);
    m_counters.increment(face, pref, Counter::DataOut);
    m_send(face, std::move(*data));
    return;
  }

  if (PitEntry* entry = m_pit.find(interest.name)) {
    if (entry->nonces.count(interest.nonce) > 0) {
      m_counters.increment(face, pref, Counter::DropLoop);
      return;
    }
    entry->nonces.insert(interest.nonce);
    entry->inFaces[face] = interest.nonce;
    m_counters.increment(face, pref, Counter::InterestsAggregated);
    return;
  }

  auto nextHops = m_fib.lookup(interest.name);
  auto hop = std::find_if(nextHops.begin(), nextHops.end(), [face] (FaceId f) { return f != face; });
  if (hop == nextHops.end()) {
    m_counters.increment(face, pref, Counter::DropUnroutable);
    return;
  }
  const FaceId outFace = *hop;

  auto [entry, isNew] = m_pit.insert(interest.name);
  entry->nonces.insert(interest.nonce);
  entry->inFaces[face] = interest.nonce;
  entry->outFaces.insert(outFace);
  entry->expiry = now + m_options.pitLifetime;
  entry->expiryEvent = m_scheduler.schedule(entry->expiry, [this, name = interest.name] {
    onPitExpiry(name);
  });

  m_counters.increment(outFace, pref, Counter::InterestsOut);
  m_send(outFace, interest);
}

void
Forwarder::receiveData(FaceId face, const Data& data)
{
  const Name* pref = matchedPrefix(data.name);
  m_counters.increment(face, pref, Counter::DataIn);

  PitEntry* entry = m_pit.find(data.name);
  if (entry == nullptr || entry->outFaces.count(face) == 0) {
    m_counters.increment(face, pref, Counter::DropUnsolicited);
    return;
  }

  m_scheduler.cancel(entry->expiryEvent);
  auto inFaces = std::move(entry->inFaces);
  m_pit.erase(data.name);

  for (const auto& [downstream, nonce] : inFaces) {
    m_counters.increment(downstream, pref, Counter::DataOut);
    m_send(downstream, data);
  }
  m_cs.insert(data, m_scheduler.now());
}

void
Forwarder::receiveNack(FaceId face, const Nack& nack)
{
  const Name* pref = &nack.payload.pref();
  m_counters.increment(face, pref, Counter::NackIn);

  if (!m_strategy) {
    m_counters.increment(face, pref, Counter::NackIgnored);
    return;
  }
  if (!m_strategy->validateNack(face, nack)) {
    m_counters.increment(face, pref, Counter::DropInvalidNack);
    return;
  }
  for (auto& [downstream, out] : m_strategy->handleNack(face, nack, m_scheduler.now())) {
    sendNack(downstream, std::move(out));
  }
}

void
Forwarder::sendNack(FaceId face, Nack nack)
{
  m_counters.increment(face, &nack.payload.pref(), Counter::NackOut);
  nack.hopTag = face;
  m_send(face, std::move(nack));
}

void
Forwarder::onPitExpiry(const Name& name)
{
  PitEntry* entry = m_pit.find(name);
  if (entry == nullptr) {
    return;
  }
  const Name* pref = matchedPrefix(name);
  for (const auto& [face, nonce] : entry->inFaces) {
    m_counters.increment(face, pref, Counter::PitExpiry);
  }
  m_pit.erase(name);
}

} // namespace fitt
