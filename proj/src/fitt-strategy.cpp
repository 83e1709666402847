#include "fitt/fitt-strategy.hpp"

#include <cassert>

namespace fitt {

bool
validateNack(FaceId arrivalFace, const Nack& nack, const Fib& fib)
{
  return fib.hasRouteCovering(nack.payload.pref(), arrivalFace);
}

std::set<FaceId>
suspectFaces(const Name& pref, const Pit& pit)
{
  std::set<FaceId> suspects;
  pit.forEachUnder(pref, [&] (const PitEntry& entry) {
    for (const auto& [face, nonce] : entry.inFaces) {
      suspects.insert(face);
    }
  });
  return suspects;
}

std::map<FaceId, double>
computeWeights(const std::set<FaceId>& suspects)
{
  assert(!suspects.empty());
  std::map<FaceId, double> weights;
  const double share = 1.0 / static_cast<double>(suspects.size());
  for (FaceId face : suspects) {
    weights.emplace(face, share);
  }
  return weights;
}

std::map<FaceId, std::vector<Name>>
partitionFakeList(const std::vector<Name>& fakeList, const Pit& pit)
{
  std::map<FaceId, std::vector<Name>> parts;
  for (const auto& name : fakeList) {
    const PitEntry* entry = pit.find(name);
    if (entry == nullptr) {
      continue;
    }
    for (const auto& [face, nonce] : entry->inFaces) {
      parts[face].push_back(name);
    }
  }
  return parts;
}

const char*
toString(ThrottleEvent::Kind kind)
{
  switch (kind) {
    case ThrottleEvent::INSTALL: return "install";
    case ThrottleEvent::TIGHTEN: return "tighten";
    case ThrottleEvent::HALVE: return "halving";
    case ThrottleEvent::BLACKLIST: return "blacklist";
    case ThrottleEvent::LIFT: return "lift";
    case ThrottleEvent::REVERT: return "revert";
  }
  return "?";
}

FittStrategy::FittStrategy(Forwarder& forwarder, FittOptions options)
  : m_forwarder(forwarder)
  , m_options(std::move(options))
{
}

bool
FittStrategy::validateNack(FaceId face, const Nack& nack) const
{
  return fitt::validateNack(face, nack, m_forwarder.fib());
}

const Name*
FittStrategy::matchedPrefix(const Name& name) const
{
  const Name* best = nullptr;
  for (const auto& [key, record] : m_records) {
    if (record.pref.isPrefixOf(name) && (best == nullptr || record.pref.size() > best->size())) {
      best = &record.pref;
    }
  }
  return best;
}

bool
FittStrategy::admitInterest(FaceId face, const Name& name, Time now)
{
  if (m_records.empty() || !throttlesFace(face)) {
    return true;
  }

  // every matching throttle observes the offered Interest; the most specific prefix decides
  std::vector<std::pair<FittRecord*, FaceThrottle*>> matches;
  size_t bestLength = 0;
  for (auto& [key, record] : m_records) {
    if (!record.pref.isPrefixOf(name)) {
      continue;
    }
    auto it = record.perFace.find(face);
    if (it == record.perFace.end()) {
      continue;
    }
    ++it->second.measuredCount;
    matches.emplace_back(&record, &it->second);
    bestLength = std::max(bestLength, record.pref.size());
  }
  if (matches.empty()) {
    return true;
  }

  FaceThrottle* decisive = nullptr;
  for (auto& [record, throttle] : matches) {
    if (record->pref.size() == bestLength && (decisive == nullptr || throttle->limit < decisive->limit)) {
      decisive = throttle;
    }
  }

  bool accepted = !decisive->isBlocked() && decisive->bucket.tryConsume(now);
  if (!accepted) {
    // drops are evidence the reaction is still needed
    for (auto& [record, throttle] : matches) {
      if (record->pref.size() == bestLength) {
        record->revertDeadline = std::max(record->revertDeadline, now + m_options.revertTimer);
      }
    }
  }
  return accepted;
}

std::vector<std::pair<FaceId, Nack>>
FittStrategy::handleNack(FaceId face, const Nack& nack, Time now)
{
  const FittNackPayload& payload = nack.payload;
  std::vector<std::pair<FaceId, Nack>> out;
  if (payload.isLiftNotice()) {
    return out;
  }

  FittRecord& record = getOrCreateRecord(payload.pref(), payload.reason());
  refreshRevert(record, now);
  const Pit& pit = m_forwarder.pit();

  if (payload.reason() == NackReason::FAKE) {
    for (auto& [downstream, names] : partitionFakeList(payload.fakeList(), pit)) {
      if (downstream == face) {
        continue;
      }
      if (throttlesFace(downstream)) {
        installLimit(downstream, payload.pref(), NackReason::FAKE, 0, now);
      }
      if (!isOpaque(downstream)) {
        out.emplace_back(downstream, Nack{FittNackPayload::makeFake(payload.pref(), std::move(names))});
      }
    }
    return out;
  }

  auto suspects = suspectFaces(payload.pref(), pit);
  suspects.erase(face);
  if (suspects.empty()) {
    return out;
  }
  for (const auto& [downstream, weight] : computeWeights(suspects)) {
    const Rate share = weight * payload.capacity();
    if (throttlesFace(downstream)) {
      installLimit(downstream, payload.pref(), NackReason::VALID, share, now);
    }
    if (!isOpaque(downstream)) {
      out.emplace_back(downstream, Nack{FittNackPayload::makeValid(payload.pref(), share)});
    }
  }
  return out;
}

void
FittStrategy::installLimit(FaceId face, const Name& pref, NackReason reason, Rate capacity, Time now)
{
  FittRecord& record = getOrCreateRecord(pref, reason);
  Rate limit = reason == NackReason::FAKE ? 0.0 : capacity;
  if (limit < m_options.blacklistFloor) {
    limit = 0;
  }

  auto it = record.perFace.find(face);
  if (it == record.perFace.end()) {
    FaceThrottle throttle;
    throttle.limit = limit;
    throttle.windowStart = now;
    throttle.bucket = TokenBucket(limit, now);
    record.perFace.emplace(face, std::move(throttle));
    notify(ThrottleEvent::INSTALL, now, face, record, limit);
  }
  else if (limit < it->second.limit) {
    it->second.limit = limit;
    it->second.bucket.setRate(limit, now);
    notify(ThrottleEvent::TIGHTEN, now, face, record, limit);
  }

  if (reason == NackReason::VALID) {
    ensureRateLimitTimer(record);
  }
}

void
FittStrategy::onRateLimitTimer(const RecordKey& key, std::uint64_t generation)
{
  auto found = m_records.find(key);
  if (found == m_records.end() || found->second.generation != generation) {
    return;
  }
  FittRecord& record = found->second;
  const Time now = m_forwarder.scheduler().now();
  bool active = false;

  for (auto it = record.perFace.begin(); it != record.perFace.end();) {
    auto& [face, throttle] = *it;
    if (throttle.blacklisted) {
      ++it;
      continue;
    }
    const Time elapsed = now - throttle.windowStart;
    if (elapsed * 2 < m_options.rateLimitTimer) {
      // installed mid-window; judged on the next tick
      active = true;
      ++it;
      continue;
    }

    // one Interest of slack absorbs counting quantization and packets already in flight
    const double allowed = throttle.limit * (1.0 + m_options.complianceTolerance) * toSeconds(elapsed) + 1.0;
    if (static_cast<double>(throttle.measuredCount) <= allowed) {
      const FaceId lifted = face;
      notify(ThrottleEvent::LIFT, now, lifted, record, UNLIMITED_RATE);
      it = record.perFace.erase(it);
      if (!isOpaque(lifted)) {
        sendLiftNotice(lifted, record.pref);
      }
      continue;
    }

    const Rate halved = throttle.limit / 2;
    if (halved < m_options.blacklistFloor) {
      throttle.limit = 0;
      throttle.blacklisted = true;
      notify(ThrottleEvent::BLACKLIST, now, face, record, 0);
    }
    else {
      throttle.limit = halved;
      notify(ThrottleEvent::HALVE, now, face, record, halved);
      active = true;
    }
    throttle.bucket.setRate(throttle.limit, now);
    throttle.measuredCount = 0;
    throttle.windowStart = now;
    ++it;
  }

  record.rateLimitTimerRunning = active;
  if (active) {
    m_forwarder.scheduler().scheduleAfter(m_options.rateLimitTimer, [this, key, generation] {
      onRateLimitTimer(key, generation);
    });
  }
}

void
FittStrategy::onRevertTimer(const RecordKey& key, std::uint64_t generation)
{
  auto found = m_records.find(key);
  if (found == m_records.end() || found->second.generation != generation) {
    return;
  }
  FittRecord& record = found->second;
  Scheduler& scheduler = m_forwarder.scheduler();
  const Time now = scheduler.now();
  if (record.revertDeadline > now) {
    scheduler.schedule(record.revertDeadline, [this, key, generation] { onRevertTimer(key, generation); });
    return;
  }
  record.revertScheduled = false;

  for (auto it = record.perFace.begin(); it != record.perFace.end();) {
    auto& [face, throttle] = *it;
    if (throttle.blacklisted && m_options.keepBlacklistOnRevert) {
      ++it;
      continue;
    }
    notify(ThrottleEvent::REVERT, now, face, record, UNLIMITED_RATE);
    if (record.reason == NackReason::VALID && !throttle.blacklisted && !isOpaque(face)) {
      sendLiftNotice(face, record.pref);
    }
    it = record.perFace.erase(it);
  }

  if (record.perFace.empty()) {
    m_records.erase(found);
  }
}

const FittRecord*
FittStrategy::findRecord(const Name& pref, NackReason reason) const
{
  auto it = m_records.find(RecordKey{pref, reason});
  return it == m_records.end() ? nullptr : &it->second;
}

Rate
FittStrategy::effectiveLimit(FaceId face, const Name& pref) const
{
  Rate limit = UNLIMITED_RATE;
  for (auto reason : {NackReason::FAKE, NackReason::VALID}) {
    if (const FittRecord* record = findRecord(pref, reason)) {
      auto it = record->perFace.find(face);
      if (it != record->perFace.end()) {
        limit = std::min(limit, it->second.limit);
      }
    }
  }
  return limit;
}

FittRecord&
FittStrategy::getOrCreateRecord(const Name& pref, NackReason reason)
{
  auto [it, isNew] = m_records.try_emplace(RecordKey{pref, reason});
  if (isNew) {
    it->second.pref = pref;
    it->second.reason = reason;
    it->second.generation = m_nextGeneration++;
  }
  return it->second;
}

void
FittStrategy::refreshRevert(FittRecord& record, Time now)
{
  record.revertDeadline = now + m_options.revertTimer;
  if (!record.revertScheduled) {
    record.revertScheduled = true;
    m_forwarder.scheduler().schedule(record.revertDeadline,
                                     [this, key = RecordKey{record.pref, record.reason}, gen = record.generation] {
                                       onRevertTimer(key, gen);
                                     });
  }
}

void
FittStrategy::ensureRateLimitTimer(FittRecord& record)
{
  if (record.rateLimitTimerRunning) {
    return;
  }
  record.rateLimitTimerRunning = true;
  m_forwarder.scheduler().scheduleAfter(m_options.rateLimitTimer,
                                        [this, key = RecordKey{record.pref, record.reason}, gen = record.generation] {
                                          onRateLimitTimer(key, gen);
                                        });
}

void
FittStrategy::notify(ThrottleEvent::Kind kind, Time now, FaceId face, const FittRecord& record, Rate limit)
{
  if (m_listener) {
    m_listener(ThrottleEvent{kind, now, face, record.pref, record.reason, limit});
  }
}

void
FittStrategy::sendLiftNotice(FaceId face, const Name& pref)
{
  m_forwarder.sendNack(face, Nack{FittNackPayload::makeValid(pref, UNLIMITED_RATE)});
}

} // namespace fitt
