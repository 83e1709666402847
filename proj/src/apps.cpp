#include "fitt/apps.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace fitt {

Producer::Producer(ProducerConfig config)
  : m_config(std::move(config))
{
  if (!(m_config.capacity > 0)) {
    throw Error("producer capacity must be positive");
  }
}

bool
Producer::isStaticName(const Name& name) const
{
  if (name.size() != m_config.prefix.size() + 1) {
    return false;
  }
  const std::string& last = name.get(name.size() - 1);
  std::uint64_t index = 0;
  auto [ptr, ec] = std::from_chars(last.data(), last.data() + last.size(), index);
  return ec == std::errc() && ptr == last.data() + last.size() && index < m_config.staticNameCount;
}

Producer::Reply
Producer::onInterest(const Interest& interest, Time now)
{
  if (!m_config.prefix.isPrefixOf(interest.name)) {
    return {Verdict::OUT_OF_PREFIX, std::nullopt};
  }

  if (isStaticName(interest.name)) {
    m_validArrivals.push_back(now);
    return {Verdict::STATIC_DATA, Data{interest.name, m_config.freshness}};
  }
  if (interest.dynamic) {
    m_validArrivals.push_back(now);
    return {Verdict::DYNAMIC_DATA, Data{interest.name, Time(0)}};
  }
  m_fakeWindow.push_back(interest.name);
  return {Verdict::FAKE_DETECTED, std::nullopt};
}

Rate
Producer::validRate(Time now)
{
  while (!m_validArrivals.empty() && m_validArrivals.front() <= now - m_config.rateWindow) {
    m_validArrivals.pop_front();
  }
  return static_cast<double>(m_validArrivals.size()) / toSeconds(m_config.rateWindow);
}

std::vector<Nack>
Producer::tick(Time now)
{
  std::vector<Nack> out;
  if (!m_fakeWindow.empty()) {
    out.push_back(Nack{FittNackPayload::makeFake(m_config.prefix, std::move(m_fakeWindow))});
    m_fakeWindow.clear();
    m_lastFakeNack = now;
  }
  if (validRate(now) > m_config.capacity &&
      (!m_lastValidNack || now - *m_lastValidNack >= m_config.nackRefreshInterval)) {
    out.push_back(Nack{FittNackPayload::makeValid(m_config.prefix, m_config.capacity)});
    m_lastValidNack = now;
  }
  return out;
}

const char*
toString(AttackKind kind)
{
  switch (kind) {
    case AttackKind::I1: return "I1";
    case AttackKind::I2: return "I2";
    case AttackKind::I3: return "I3";
    case AttackKind::MIXED: return "MIXED";
  }
  return "?";
}

AttackKind
parseAttackKind(const std::string& text)
{
  for (auto kind : {AttackKind::I1, AttackKind::I2, AttackKind::I3, AttackKind::MIXED}) {
    if (text == toString(kind)) {
      return kind;
    }
  }
  throw Error("unknown attack kind '" + text + "' (expected I1, I2, I3 or MIXED)");
}

TrafficClass
parseTrafficClass(const std::string& text)
{
  if (text == "I1") {
    return TrafficClass::I1;
  }
  if (text == "I3") {
    return TrafficClass::I3;
  }
  throw Error("unknown traffic class '" + text + "' (expected I1 or I3)");
}

ConsumerRate::ConsumerRate(Name prefix, Rate configured, bool compliant, Time rampWindow)
  : m_prefix(std::move(prefix))
  , m_configured(configured)
  , m_compliant(compliant)
  , m_rampWindow(rampWindow)
  , m_rate(configured)
{
  if (!(configured > 0)) {
    throw Error("consumer rate must be positive");
  }
}

Rate
ConsumerRate::current(Time now) const
{
  if (!m_rampStart) {
    return m_rate;
  }
  if (now >= *m_rampStart + m_rampWindow || m_rampWindow <= Time(0)) {
    return m_configured;
  }
  double progress = toSeconds(now - *m_rampStart) / toSeconds(m_rampWindow);
  return m_rampFrom + (m_configured - m_rampFrom) * progress;
}

bool
ConsumerRate::onNack(const Nack& nack, Time now)
{
  const FittNackPayload& payload = nack.payload;
  if (!m_compliant || payload.reason() != NackReason::VALID || !payload.pref().isPrefixOf(m_prefix)) {
    return false;
  }

  const Rate before = current(now);
  if (payload.isLiftNotice()) {
    if (before >= m_configured) {
      return false;
    }
    m_rampFrom = before;
    m_rampStart = now;
    m_rate = m_configured;
    return true;
  }

  m_rampStart.reset();
  m_rate = std::min(before, payload.capacity());
  return m_rate != before;
}

namespace {

std::string
randomComponent(Rng& rng)
{
  char buf[24];
  std::snprintf(buf, sizeof(buf), "f%016llx", static_cast<unsigned long long>(rng()));
  return buf;
}

Interest
staticInterest(const Name& prefix, std::uint64_t universe, Rng& rng)
{
  std::uniform_int_distribution<std::uint64_t> pick(0, universe - 1);
  return Interest{Name(prefix).append(std::to_string(pick(rng))), rng(), false};
}

Interest
dynamicInterest(const Name& prefix, const std::string& tag, std::uint64_t& counter, Rng& rng)
{
  return Interest{Name(prefix).append("d" + tag + "-" + std::to_string(counter++)), rng(), true};
}

} // namespace

AttackNameGenerator::AttackNameGenerator(AttackKind kind, Name target, std::uint64_t universe, std::string tag)
  : m_kind(kind)
  , m_target(std::move(target))
  , m_universe(universe)
  , m_tag(std::move(tag))
{
  if (kind == AttackKind::I1 && universe == 0) {
    throw Error("I1 attack needs a non-empty name universe");
  }
}

Interest
AttackNameGenerator::next(Rng& rng)
{
  switch (m_kind) {
    case AttackKind::I1:
      return staticInterest(m_target, m_universe, rng);
    case AttackKind::I2:
      return Interest{Name(m_target).append(randomComponent(rng)), rng(), false};
    case AttackKind::I3:
      return dynamicInterest(m_target, m_tag, m_counter, rng);
    case AttackKind::MIXED: {
      // even emissions are fake, odd ones valid: rate/2 each
      bool fake = (m_counter % 2) == 0;
      if (fake) {
        ++m_counter;
        return Interest{Name(m_target).append(randomComponent(rng)), rng(), false};
      }
      return dynamicInterest(m_target, m_tag, m_counter, rng);
    }
  }
  throw Error("unreachable attack kind");
}

Interest
makeConsumerInterest(TrafficClass cls, const Name& prefix, std::uint64_t universe, const std::string& tag,
                     std::uint64_t& counter, Rng& rng)
{
  if (cls == TrafficClass::I1) {
    return staticInterest(prefix, universe, rng);
  }
  return dynamicInterest(prefix, tag, counter, rng);
}

Time
jitteredGap(Rate rate, Rng& rng)
{
  std::uniform_real_distribution<double> jitter(0.9, 1.1);
  return seconds(jitter(rng) / rate);
}

} // namespace fitt
