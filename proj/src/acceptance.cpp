#include "fitt/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace fitt {

namespace {

constexpr double EPS = 1e-9;

std::string
num(double v, int precision = 3)
{
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

const ProducerConfig&
producerFor(const ScenarioConfig& config, const Name& prefix)
{
  for (const auto& pc : config.producers) {
    if (pc.prefix == prefix) {
      return pc;
    }
  }
  throw Error("no producer serves " + prefix.toUri());
}

std::vector<double>
producerSeries(const RunResult& run, const ProducerConfig& pc, const std::string& metric)
{
  return run.metrics.series(pc.node, pc.prefix.toUri(), metric);
}

size_t
firstBinFrom(const RunResult& run, double t)
{
  return static_cast<size_t>(std::max(0.0, std::ceil(t / run.metrics.binWidth() - EPS)));
}

double
binStart(const RunResult& run, size_t bin)
{
  return static_cast<double>(bin) * run.metrics.binWidth();
}

std::optional<double>
firstNack(const RunResult& run, const Name& prefix, std::optional<NackReason> reason = std::nullopt)
{
  for (const auto& e : run.nackLog) {
    if (e.pref == prefix && (!reason || e.reason == *reason)) {
      return toSeconds(e.time);
    }
  }
  return std::nullopt;
}

double
attackStart(const ScenarioConfig& config, const Name& prefix)
{
  double start = std::numeric_limits<double>::infinity();
  for (const auto& as : config.attacks) {
    if (as.targetPrefix == prefix) {
      start = std::min(start, toSeconds(as.start));
    }
  }
  return start;
}

/// "router:host" for the access face of every host in \p hosts.
std::map<std::string, std::string>
accessFaces(const ScenarioConfig& config, const std::vector<std::string>& hosts)
{
  std::map<std::string, std::string> faces;
  for (const auto& host : hosts) {
    for (const auto& link : config.topology.links) {
      if (link.a == host || link.b == host) {
        faces[host] = (link.a == host ? link.b : link.a) + ":" + host;
        break;
      }
    }
  }
  return faces;
}

std::string
faceKey(const ThrottleLogEntry& e)
{
  return e.node + ":" + e.peer;
}

double
mean(const std::vector<double>& v, size_t begin, size_t end)
{
  if (begin >= end) {
    return 0;
  }
  double sum = 0;
  for (size_t i = begin; i < end; ++i) {
    sum += v[i];
  }
  return sum / static_cast<double>(end - begin);
}

size_t
lastBins(const RunResult& run, size_t n)
{
  size_t count = run.metrics.binCount();
  return count > n ? count - n : 0;
}

void
addFinalShare(CheckReport& report, const RunResult& run, const ProducerConfig& pc, const std::string& label)
{
  auto share = producerSeries(run, pc, "legit_share");
  double worst = 1.0;
  for (size_t b = lastBins(run, 3); b < share.size(); ++b) {
    worst = std::min(worst, share[b]);
  }
  report.add(label + "final legit_share (last 3 bins, minimum)", worst >= 0.99, num(worst, 4), ">= 0.99");
}

void
addLegitRecovery(CheckReport& report, const ScenarioConfig& config, const RunResult& run, const Name& prefix,
                 const std::string& label)
{
  const auto uri = prefix.toUri();
  std::map<std::string, Rate> configured;
  for (const auto& cc : config.consumers) {
    if (cc.prefix == prefix) {
      for (const auto& id : resolveSelector(config.topology, cc.where)) {
        configured[id] += cc.rate;
      }
    }
  }

  double worstDev = 0;
  std::string worstNode = "-";
  for (const auto& [id, rate] : configured) {
    auto sent = run.metrics.series(id, uri, "sent");
    for (size_t b = lastBins(run, 3); b < sent.size(); ++b) {
      double dev = std::abs(sent[b] - rate) / rate;
      if (dev > worstDev) {
        worstDev = dev;
        worstNode = id;
      }
    }
  }
  report.add(label + "legit clients back at their configured rate (last 3 bins, worst deviation)",
             !configured.empty() && worstDev <= 0.05, num(worstDev * 100, 2) + "% at " + worstNode, "<= 5%");

  // every throttle a legitimate face received must be gone by the end of the run
  auto faces = accessFaces(config, legitNodes(config, prefix));
  std::set<std::string> legitFaces;
  for (const auto& [host, face] : faces) {
    legitFaces.insert(face);
  }
  std::map<std::string, ThrottleEvent::Kind> last;
  for (const auto& e : run.throttleLog) {
    if (e.event.pref == prefix && legitFaces.count(faceKey(e)) > 0) {
      last[faceKey(e)] = e.event.kind;
    }
  }
  size_t stillThrottled = 0;
  for (const auto& [face, kind] : last) {
    if (kind != ThrottleEvent::LIFT && kind != ThrottleEvent::REVERT) {
      ++stillThrottled;
    }
  }
  report.add(label + "legit faces whose throttle was removed", stillThrottled == 0,
             std::to_string(last.size() - stillThrottled) + "/" + std::to_string(last.size()),
             std::to_string(last.size()) + "/" + std::to_string(last.size()));
}

void
addBlockingDeadline(CheckReport& report, const ScenarioConfig& config, const RunResult& run, const Name& prefix,
                    const std::string& label)
{
  const double timer = toSeconds(config.timers.rateLimitTimer);
  auto faces = accessFaces(config, attackerNodes(config, prefix));
  std::set<std::string> attackerFaces;
  for (const auto& [host, face] : faces) {
    attackerFaces.insert(face);
  }

  double initial = 0;
  std::map<std::string, double> blockedAt;
  for (const auto& e : run.throttleLog) {
    if (e.event.pref != prefix || attackerFaces.count(faceKey(e)) == 0) {
      continue;
    }
    const auto& ev = e.event;
    if (ev.kind == ThrottleEvent::INSTALL && ev.reason == NackReason::VALID) {
      initial = std::max(initial, ev.limit);
    }
    bool blocks = ev.limit == 0 && (ev.kind == ThrottleEvent::INSTALL || ev.kind == ThrottleEvent::TIGHTEN ||
                                    ev.kind == ThrottleEvent::BLACKLIST);
    if (blocks && blockedAt.count(faceKey(e)) == 0) {
      blockedAt[faceKey(e)] = toSeconds(ev.time);
    }
  }

  const double start = attackStart(config, prefix);
  const double steps = initial >= 1 ? std::ceil(std::log2(initial)) + 1 : 1;
  const double deadline = start + timer * steps;
  double latest = 0;
  size_t blocked = 0;
  for (const auto& face : attackerFaces) {
    auto it = blockedAt.find(face);
    if (it != blockedAt.end() && it->second <= deadline + EPS) {
      ++blocked;
      latest = std::max(latest, it->second);
    }
  }
  report.add(label + "attacker faces BLOCKED by " + num(start, 0) + " + " + num(timer, 0) + " x (ceil(log2 " +
               num(initial, 2) + ") + 1) = " + num(deadline, 2) + " s",
             !attackerFaces.empty() && blocked == attackerFaces.size(),
             std::to_string(blocked) + "/" + std::to_string(attackerFaces.size()) + ", last at " + num(latest, 3) +
               " s",
             std::to_string(attackerFaces.size()) + "/" + std::to_string(attackerFaces.size()));

  const auto& pc = producerFor(config, prefix);
  auto attack = producerSeries(run, pc, "received_attack");
  double leaked = 0;
  for (size_t b = firstBinFrom(run, deadline); b < attack.size(); ++b) {
    leaked = std::max(leaked, attack[b]);
  }
  report.add(label + "attacker-origin received rate after the deadline (maximum)", leaked == 0, num(leaked),
             "0");
}

void
addHalvingSteps(CheckReport& report, const ScenarioConfig& config, const RunResult& run, const Name& prefix,
                const std::string& label)
{
  const double timer = toSeconds(config.timers.rateLimitTimer);
  const auto& pc = producerFor(config, prefix);
  auto t0 = firstNack(run, prefix, NackReason::VALID);
  if (!t0) {
    report.add(label + "victim reported a VALID overload", false, "no NACK", "at least one");
    return;
  }

  auto faces = accessFaces(config, attackerNodes(config, prefix));
  std::set<std::string> attackerFaces;
  for (const auto& [host, face] : faces) {
    attackerFaces.insert(face);
  }
  double firstBlacklist = std::numeric_limits<double>::infinity();
  std::map<std::string, std::vector<double>> reinforcements;
  for (const auto& e : run.throttleLog) {
    if (e.event.pref != prefix || attackerFaces.count(faceKey(e)) == 0) {
      continue;
    }
    if (e.event.kind == ThrottleEvent::HALVE || e.event.kind == ThrottleEvent::BLACKLIST) {
      reinforcements[faceKey(e)].push_back(toSeconds(e.event.time));
    }
    if (e.event.kind == ThrottleEvent::BLACKLIST) {
      firstBlacklist = std::min(firstBlacklist, toSeconds(e.event.time));
    }
  }

  // reinforcement decisions on one face are exactly one timer apart
  double worstGap = 0;
  size_t gaps = 0;
  for (const auto& [face, times] : reinforcements) {
    for (size_t i = 1; i < times.size(); ++i) {
      worstGap = std::max(worstGap, std::abs(times[i] - times[i - 1] - timer));
      ++gaps;
    }
  }
  report.add(label + "reinforcement steps per attacker face spaced by the RateLimitTimer (worst error)",
             gaps > 0 && worstGap <= 1e-3, num(worstGap, 6) + " s over " + std::to_string(gaps) + " steps",
             "<= 0.001 s");

  // attacker-origin receive rate per timer window, ignoring half a second of transient
  auto attack = producerSeries(run, pc, "received_attack");
  std::vector<double> means;
  double worstFlat = 0;
  for (int k = 0;; ++k) {
    double begin = *t0 + k * timer;
    double end = begin + timer;
    if (end > firstBlacklist + 0.1 || end > toSeconds(run.duration)) {
      break;
    }
    size_t b0 = firstBinFrom(run, begin + 0.5);
    size_t b1 = b0;
    while (b1 < attack.size() && binStart(run, b1 + 1) <= end + EPS) {
      ++b1;
    }
    if (b1 <= b0) {
      break;
    }
    double m = mean(attack, b0, b1);
    for (size_t b = b0; b < b1; ++b) {
      worstFlat = std::max(worstFlat, m > 0 ? std::abs(attack[b] - m) / m : 0);
    }
    means.push_back(m);
  }

  std::string ratios;
  bool ok = means.size() >= 4;
  for (size_t k = 1; k < means.size(); ++k) {
    double r = means[k - 1] > 0 ? means[k] / means[k - 1] : 0;
    ok = ok && r >= 0.4 && r <= 0.6;
    ratios += (ratios.empty() ? "" : ", ") + num(r, 3);
  }
  std::string levels;
  for (double m : means) {
    levels += (levels.empty() ? "" : " -> ") + num(m, 1);
  }
  report.add(label + "attacker-origin received rate halves each window (" + levels + ")", ok,
             "ratios [" + ratios + "]", ">= 3 consecutive ratios in [0.4, 0.6]");
  report.add(label + "rate flat within each window (worst bin deviation from window mean)", worstFlat <= 0.2,
             num(worstFlat * 100, 1) + "%", "<= 20%");
}

ScenarioConfig
withoutAttacksExcept(ScenarioConfig config, const std::optional<Name>& keep)
{
  std::vector<AttackSpec> kept;
  for (const auto& as : config.attacks) {
    if (keep && as.targetPrefix == *keep) {
      kept.push_back(as);
    }
  }
  config.attacks = std::move(kept);
  return config;
}

double
meanFrom(const std::vector<double>& v, size_t begin)
{
  return mean(v, begin, v.size());
}

} // namespace

bool
CheckReport::passed() const
{
  return !assertions.empty() &&
         std::all_of(assertions.begin(), assertions.end(), [] (const Assertion& a) { return a.passed; });
}

void
CheckReport::add(std::string name, bool ok, std::string measured, std::string expected)
{
  assertions.push_back(Assertion{std::move(name), ok, std::move(measured), std::move(expected)});
}

void
printReport(std::ostream& os, const CheckReport& report)
{
  os << (report.passed() ? "PASS" : "FAIL");
  if (report.criterion > 0) {
    os << " criterion " << report.criterion;
  }
  os << ": " << report.title << '\n';
  for (const auto& a : report.assertions) {
    os << "    [" << (a.passed ? "ok" : "FAILED") << "] " << a.name << ": measured " << a.measured
       << ", expected " << a.expected << '\n';
  }
}

Rate
configuredLegitRate(const ScenarioConfig& config, const Name& prefix)
{
  Rate total = 0;
  for (const auto& cc : config.consumers) {
    if (cc.prefix == prefix) {
      total += cc.rate * static_cast<double>(resolveSelector(config.topology, cc.where).size());
    }
  }
  return total;
}

std::vector<std::string>
attackerNodes(const ScenarioConfig& config, const Name& prefix)
{
  std::vector<std::string> ids;
  for (const auto& as : config.attacks) {
    if (as.targetPrefix == prefix) {
      for (auto& id : resolveSelector(config.topology, as.where)) {
        ids.push_back(std::move(id));
      }
    }
  }
  return ids;
}

std::vector<std::string>
legitNodes(const ScenarioConfig& config, const Name& prefix)
{
  std::vector<std::string> ids;
  for (const auto& cc : config.consumers) {
    if (cc.prefix == prefix) {
      for (auto& id : resolveSelector(config.topology, cc.where)) {
        ids.push_back(std::move(id));
      }
    }
  }
  return ids;
}

CheckReport
checkFakeSuppression(const ScenarioConfig& config, const RunResult& run)
{
  CheckReport report{1, "fake-attack suppression", {}};
  const auto& pc = config.producers.at(0);
  auto t0 = firstNack(run, pc.prefix, NackReason::FAKE);
  report.add("victim sent a FAKE NACK", t0.has_value(), t0 ? num(*t0) + " s" : "none", "one");
  if (!t0) {
    return report;
  }

  const Rate legit = configuredLegitRate(config, pc.prefix);
  auto received = producerSeries(run, pc, "received");
  double worst = 0;
  double worstAt = 0;
  const size_t from = firstBinFrom(run, *t0 + 1.0);
  for (size_t b = from; b < received.size(); ++b) {
    double dev = std::abs(received[b] - legit) / legit;
    if (dev > worst) {
      worst = dev;
      worstAt = binStart(run, b);
    }
  }
  report.add("received rate within 10% of " + num(legit, 0) + "/s in every bin from " +
               num(binStart(run, from), 0) + " s (first NACK + <= 2 s)",
             from < received.size() && worst <= 0.10, num(worst * 100, 2) + "% worst, bin " + num(worstAt, 0),
             "<= 10%");

  auto share = producerSeries(run, pc, "legit_share");
  double lowest = 1.0;
  for (size_t b = firstBinFrom(run, 8.0); b < share.size(); ++b) {
    lowest = std::min(lowest, share[b]);
  }
  report.add("legit_share in every bin after 8 s (minimum)", lowest >= 0.99, num(lowest, 4), ">= 0.99");
  return report;
}

CheckReport
checkReinforcement(const ScenarioConfig& config, const RunResult& run, const Name& prefix)
{
  CheckReport report{2, "valid-attack reinforcement", {}};
  addHalvingSteps(report, config, run, prefix, "(a) ");
  addBlockingDeadline(report, config, run, prefix, "(b) ");
  addLegitRecovery(report, config, run, prefix, "(c) ");
  addFinalShare(report, run, producerFor(config, prefix), "(d) ");
  return report;
}

CheckReport
checkMixedAttack(const ScenarioConfig& config, const RunResult& run)
{
  CheckReport report{3, "mixed attack", {}};
  const auto& pc = config.producers.at(0);
  auto t0 = firstNack(run, pc.prefix, NackReason::FAKE);
  report.add("victim sent a FAKE NACK", t0.has_value(), t0 ? num(*t0) + " s" : "none", "one");
  if (!t0) {
    return report;
  }

  const size_t from = firstBinFrom(run, *t0 + 1.0);
  auto attack = producerSeries(run, pc, "received_attack");
  auto fake = producerSeries(run, pc, "fake_detected");
  double leaked = 0;
  double fakeSeen = 0;
  for (size_t b = from; b < attack.size(); ++b) {
    leaked = std::max(leaked, attack[b]);
    fakeSeen = std::max(fakeSeen, fake[b]);
  }
  report.add("fake Interests reaching the victim from " + num(binStart(run, from), 0) + " s (maximum rate)",
             fakeSeen == 0, num(fakeSeen), "0");
  report.add("attacker-origin Interests admitted from " + num(binStart(run, from), 0) + " s (maximum rate)",
             leaked == 0, num(leaked), "0");

  // faces holding both reactions must expose the smaller limit
  auto faces = accessFaces(config, attackerNodes(config, pc.prefix));
  std::map<std::string, std::map<NackReason, double>> installed;
  for (const auto& e : run.throttleLog) {
    if (e.event.pref == pc.prefix && e.event.kind == ThrottleEvent::INSTALL) {
      installed[faceKey(e)].emplace(e.event.reason, e.event.limit);
    }
  }
  size_t both = 0;
  size_t matching = 0;
  for (const auto& [host, face] : faces) {
    auto it = installed.find(face);
    if (it == installed.end() || it->second.size() < 2) {
      continue;
    }
    ++both;
    double expected = std::min(it->second.at(NackReason::FAKE), it->second.at(NackReason::VALID));
    auto limit = run.metrics.series(face, pc.prefix.toUri(), "limit", -1);
    bool ok = true;
    for (size_t b = from; b < limit.size(); ++b) {
      ok = ok && (limit[b] == -1 || limit[b] == expected);
    }
    matching += ok ? 1 : 0;
  }
  report.add("attacker faces whose effective limit equals min(FAKE, VALID)", both > 0 && matching == both,
             std::to_string(matching) + "/" + std::to_string(both), std::to_string(both) + "/" + std::to_string(both));

  addBlockingDeadline(report, config, run, pc.prefix, "");
  addLegitRecovery(report, config, run, pc.prefix, "");
  addFinalShare(report, run, pc, "");
  return report;
}

CheckReport
checkI1Resilience(const ScenarioConfig& base)
{
  CheckReport report{4, "I-1 resilience without FITT", {}};
  ScenarioConfig noCache = base;
  noCache.csCapacity = 0;
  ScenarioConfig withCache = noCache;
  withCache.csCapacity = 200;
  ScenarioConfig wide = noCache;
  for (auto& as : wide.attacks) {
    as.nameUniverse = 1000;
  }
  for (auto& pc : wide.producers) {
    pc.staticNameCount = std::max<std::uint64_t>(pc.staticNameCount, 1000);
  }

  const auto& pc = noCache.producers.at(0);
  const auto uri = pc.prefix.toUri();
  const double start = attackStart(noCache, pc.prefix);
  auto receivedMean = [&] (const RunResult& run) {
    return meanFrom(producerSeries(run, pc, "received"), firstBinFrom(run, start + 1.0));
  };

  RunResult plain = runScenario(noCache);
  RunResult cached = runScenario(withCache);
  RunResult wider = runScenario(wide);
  const double sent = meanFrom(plain.metrics.series("all-attack", uri, "sent"), firstBinFrom(plain, start + 1.0));
  const double rPlain = receivedMean(plain);
  const double rCached = receivedMean(cached);
  const double rWide = receivedMean(wider);

  report.add("aggregation only: producer received < attacker send rate", rPlain < 0.95 * sent,
             num(rPlain, 1) + "/s vs " + num(sent, 1) + "/s", "< 95% of the send rate");
  report.add("CS 200, freshness 4 s: received strictly lower", rCached < 0.95 * rPlain,
             num(rCached, 1) + "/s vs " + num(rPlain, 1) + "/s", "< 95% of the no-cache rate");
  report.add("universe 1000 vs 500: received strictly higher", rWide > 1.05 * rPlain,
             num(rWide, 1) + "/s vs " + num(rPlain, 1) + "/s", "> 105% of the universe-500 rate");
  return report;
}

CheckReport
checkMultiPrefix(const ScenarioConfig& config, const RunResult& run)
{
  CheckReport report{5, "multi-prefix independence", {}};
  for (const auto& pc : config.producers) {
    const std::string label = pc.prefix.toUri() + ": ";
    CheckReport single = checkReinforcement(config, run, pc.prefix);
    for (auto& a : single.assertions) {
      a.name = label + a.name;
      report.assertions.push_back(std::move(a));
    }

    RunResult control = runScenario(withoutAttacksExcept(config, pc.prefix));
    auto shared = producerSeries(run, pc, "legit_share");
    auto alone = producerSeries(control, pc, "legit_share");
    double worst = 0;
    double worstAt = 0;
    for (size_t b = 0; b < shared.size() && b < alone.size(); ++b) {
      double diff = std::abs(shared[b] - alone[b]);
      if (diff > worst) {
        worst = diff;
        worstAt = binStart(run, b);
      }
    }
    report.add(label + "legit_share vs single-attack control run (worst bin)", worst <= 0.01,
               num(worst * 100, 3) + " pp at " + num(worstAt, 0) + " s", "<= 1 pp");
  }
  return report;
}

CheckReport
checkGranularity(const ScenarioConfig& config, const RunResult& run)
{
  CheckReport report{6, "throttling granularity", {}};
  std::set<Name> attacked;
  for (const auto& as : config.attacks) {
    attacked.insert(as.targetPrefix);
  }
  RunResult baseline = runScenario(withoutAttacksExcept(config, std::nullopt));
  for (const auto& pc : config.producers) {
    if (attacked.count(pc.prefix) > 0) {
      continue;
    }
    auto during = producerSeries(run, pc, "received");
    auto base = producerSeries(baseline, pc, "received");
    double worst = 0;
    double worstAt = 0;
    for (size_t b = 0; b < during.size() && b < base.size(); ++b) {
      double dev = base[b] > 0 ? std::abs(during[b] - base[b]) / base[b] : (during[b] > 0 ? 1 : 0);
      if (dev > worst) {
        worst = dev;
        worstAt = binStart(run, b);
      }
    }
    report.add(pc.prefix.toUri() + " received vs no-attack baseline (worst bin)", worst <= 0.05,
               num(worst * 100, 2) + "% at " + num(worstAt, 0) + " s", "<= 5%");
  }
  if (report.assertions.empty()) {
    report.add("an unattacked prefix exists", false, "none", "at least one");
  }
  return report;
}

CheckReport
checkUntrustedRouter(const ScenarioConfig& config, const RunResult& run)
{
  CheckReport report{0, "edge placement upstream of an untrusted router", {}};
  const auto& pc = config.producers.at(0);
  std::set<std::string> untrusted;
  for (const auto& n : config.topology.nodes) {
    if (n.role == NodeRole::ROUTER && !n.fittEnabled) {
      untrusted.insert(n.id);
    }
  }

  // routers next to an untrusted router throttle the face toward it
  std::set<std::string> upstream;
  for (const auto& link : config.topology.links) {
    for (const auto& [self, peer] : {std::pair{link.a, link.b}, std::pair{link.b, link.a}}) {
      const NodeSpec* s = config.topology.findNode(self);
      if (untrusted.count(peer) > 0 && s->role == NodeRole::ROUTER && s->fittEnabled) {
        upstream.insert(self + ":" + peer);
      }
    }
  }
  std::set<std::string> blocked;
  for (const auto& e : run.throttleLog) {
    if (upstream.count(faceKey(e)) > 0 && e.event.limit == 0) {
      blocked.insert(faceKey(e));
    }
  }
  report.add("faces toward untrusted routers blocked", !upstream.empty() && blocked.size() == upstream.size(),
             std::to_string(blocked.size()) + "/" + std::to_string(upstream.size()),
             std::to_string(upstream.size()) + "/" + std::to_string(upstream.size()));

  std::set<std::string> behind;
  for (const auto& link : config.topology.links) {
    if (untrusted.count(link.a) > 0 && config.topology.findNode(link.b)->role != NodeRole::ROUTER) {
      behind.insert(link.b);
    }
    if (untrusted.count(link.b) > 0 && config.topology.findNode(link.a)->role != NodeRole::ROUTER) {
      behind.insert(link.a);
    }
  }
  double nacks = 0;
  for (const auto& host : behind) {
    for (double v : run.metrics.series(host, pc.prefix.toUri(), "nack_received")) {
      nacks += v;
    }
  }
  report.add("NACKs delivered past an untrusted router", nacks == 0, num(nacks, 0), "0");

  double worst = 0;
  size_t clients = 0;
  for (const auto& cc : config.consumers) {
    for (const auto& id : resolveSelector(config.topology, cc.where)) {
      if (behind.count(id) > 0) {
        continue;
      }
      ++clients;
      auto sent = run.metrics.series(id, cc.prefix.toUri(), "sent");
      worst = std::max(worst, std::abs(mean(sent, lastBins(run, 3), sent.size()) - cc.rate) / cc.rate);
    }
  }
  report.add("legit clients behind trusted edges at their configured rate (mean of last 3 bins)",
             clients > 0 && worst <= 0.05, num(worst * 100, 2) + "%", "<= 5%");
  addFinalShare(report, run, pc, "");
  return report;
}

std::string
toCsv(const RunResult& run)
{
  std::ostringstream os;
  writeCsv(os, run.metrics.samples());
  return os.str();
}

CheckReport
checkDeterminism(const ScenarioConfig& config, const RunResult& first)
{
  CheckReport report{8, "determinism", {}};
  auto a = toCsv(first);
  auto b = toCsv(runScenario(config));
  size_t at = 0;
  while (at < a.size() && at < b.size() && a[at] == b[at]) {
    ++at;
  }
  bool same = a == b;
  report.add(config.name + " seed " + std::to_string(config.seed) + ": repeated run CSV", same,
             same ? std::to_string(a.size()) + " identical bytes" : "first difference at byte " + std::to_string(at),
             "byte-identical");
  return report;
}

std::vector<CheckReport>
checkBuiltin(const ScenarioConfig& config, const RunResult& run)
{
  std::vector<CheckReport> reports;
  const auto& name = config.name;
  if (name == "fake_attack") {
    reports.push_back(checkFakeSuppression(config, run));
  }
  else if (name == "valid_attack") {
    reports.push_back(checkReinforcement(config, run, config.producers.at(0).prefix));
  }
  else if (name == "mixed_attack") {
    reports.push_back(checkMixedAttack(config, run));
  }
  else if (name == "i1_resilience_nocache" || name == "i1_resilience_cache") {
    reports.push_back(checkI1Resilience(config));
  }
  else if (name == "two_prefix") {
    reports.push_back(checkMultiPrefix(config, run));
  }
  else if (name == "granularity") {
    reports.push_back(checkGranularity(config, run));
  }
  else if (name == "toy_untrusted_router") {
    reports.push_back(checkUntrustedRouter(config, run));
  }
  else {
    return reports;
  }
  reports.push_back(checkDeterminism(config, run));
  return reports;
}

} // namespace fitt
