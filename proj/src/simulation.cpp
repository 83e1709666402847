#include "fitt/simulation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fitt {

namespace {

// queued packets per link direction before tail drop; only used on capacity-limited links
constexpr double LINK_QUEUE_PACKETS = 1000;

std::uint32_t
fnv1a(const std::string& s)
{
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

} // namespace

struct Simulation::Link
{
  Time delay;
  std::optional<double> capacity;
  Time busyUntil[2] = {Time(0), Time(0)};
};

struct FaceState
{
  size_t peer;
  FaceId peerFace;
  size_t link;
  int direction;
};

struct ProducerState
{
  std::unique_ptr<Producer> producer;
  std::string prefix;
  std::vector<double> received;
  std::vector<double> legit;
};

struct Simulation::Node
{
  NodeSpec spec;
  std::vector<FaceState> faces;
  std::unique_ptr<Forwarder> forwarder;
  FittStrategy* strategy = nullptr;
  std::vector<ProducerState> producers;
  std::vector<size_t> apps;
};

struct Simulation::App
{
  size_t node;
  bool attack;
  Name prefix;
  std::string prefixUri;
  Time start;
  Time stop;
  Rng rng;
  std::optional<ConsumerRate> consumerRate;
  Rate attackRate = 0;
  std::optional<AttackNameGenerator> generator;
  TrafficClass trafficClass = TrafficClass::I3;
  std::uint64_t universe = 0;
  std::string tag;
  std::uint64_t counter = 0;
  std::optional<EventId> pending;

  Rate
  rate(Time now) const
  {
    return consumerRate ? consumerRate->current(now) : attackRate;
  }
};

Simulation::Simulation(ScenarioConfig config)
  : m_config(std::move(config))
  , m_metrics(m_config.metricBin, m_config.duration)
{
  // bin flushes go in first so they precede any other event at the same instant
  for (size_t bin = 0; bin + 1 < m_metrics.binCount(); ++bin) {
    m_scheduler.schedule(m_config.metricBin * static_cast<std::int64_t>(bin + 1), [this, bin] { flushBin(bin); });
  }
  // keeps every bin present even in a run without traffic
  m_metrics.requireSeries("network", "-", "packets_delivered");
  buildNodes();
  buildLinks();
  computeRoutes();
  buildApps();
}

Simulation::~Simulation() = default;

void
Simulation::buildNodes()
{
  for (const auto& spec : m_config.topology.nodes) {
    if (!m_index.emplace(spec.id, m_nodes.size()).second) {
      throw ScenarioError("topology: duplicate node id '" + spec.id + "'");
    }
    auto node = std::make_unique<Node>();
    node->spec = spec;
    m_nodes.push_back(std::move(node));
  }
}

void
Simulation::buildLinks()
{
  auto& links = m_links;
  for (size_t i = 0; i < m_config.topology.links.size(); ++i) {
    const auto& spec = m_config.topology.links[i];
    auto a = m_index.find(spec.a);
    auto b = m_index.find(spec.b);
    if (a == m_index.end() || b == m_index.end()) {
      throw ScenarioError("topology.links[" + std::to_string(i) + "]: unknown node");
    }
    Node& na = *m_nodes[a->second];
    Node& nb = *m_nodes[b->second];
    auto fa = static_cast<FaceId>(na.faces.size());
    auto fb = static_cast<FaceId>(nb.faces.size());
    na.faces.push_back(FaceState{b->second, fb, links.size(), 0});
    nb.faces.push_back(FaceState{a->second, fa, links.size(), 1});
    links.push_back(Link{spec.delay, spec.capacity});
  }

  for (size_t n = 0; n < m_nodes.size(); ++n) {
    Node& node = *m_nodes[n];
    if (node.spec.role != NodeRole::ROUTER) {
      continue;
    }
    ForwarderOptions options{m_config.timers.pitLifetime, m_config.csCapacity};
    node.forwarder = std::make_unique<Forwarder>(m_scheduler, options, [this, n] (FaceId face, Packet packet) {
      send(n, face, std::move(packet));
    });
    if (!m_config.fitt.enabled || !node.spec.fittEnabled) {
      continue;
    }

    FittOptions fo;
    fo.isEdge = node.spec.isEdge;
    fo.revertTimer = node.spec.revertTimer.value_or(m_config.timers.revertTimer);
    fo.rateLimitTimer = node.spec.rateLimitTimer.value_or(m_config.timers.rateLimitTimer);
    fo.complianceTolerance = m_config.fitt.complianceTolerance;
    fo.blacklistFloor = m_config.fitt.blacklistFloor;
    fo.keepBlacklistOnRevert = m_config.fitt.keepBlacklistOnRevert;
    for (FaceId f = 0; f < node.faces.size(); ++f) {
      const NodeSpec& peer = m_nodes[node.faces[f].peer]->spec;
      if (peer.role == NodeRole::ROUTER && !peer.fittEnabled) {
        fo.opaqueFaces.insert(f);
      }
    }

    auto strategy = std::make_unique<FittStrategy>(*node.forwarder, std::move(fo));
    strategy->setEventListener([this, n] (const ThrottleEvent& ev) {
      const Node& self = *m_nodes[n];
      const std::string& peer = m_nodes[self.faces[ev.face].peer]->spec.id;
      std::string where = self.spec.id + ":" + peer;
      if (ev.kind == ThrottleEvent::HALVE || ev.kind == ThrottleEvent::BLACKLIST) {
        m_metrics.count(ev.time, where, ev.pref.toUri(), toString(ev.kind));
      }
      m_throttleLog.push_back(ThrottleLogEntry{self.spec.id, peer, ev});
    });
    node.strategy = strategy.get();
    node.forwarder->setStrategy(std::move(strategy));
  }
}

void
Simulation::computeRoutes()
{
  for (size_t p = 0; p < m_nodes.size(); ++p) {
    for (const auto& producer : m_config.producers) {
      if (producer.node != m_nodes[p]->spec.id) {
        continue;
      }
      // BFS outward from the producer; only routers relay
      std::vector<int> dist(m_nodes.size(), -1);
      std::deque<size_t> queue{p};
      dist[p] = 0;
      while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        if (u != p && m_nodes[u]->spec.role != NodeRole::ROUTER) {
          continue;
        }
        for (const auto& face : m_nodes[u]->faces) {
          if (dist[face.peer] < 0) {
            dist[face.peer] = dist[u] + 1;
            queue.push_back(face.peer);
          }
        }
      }
      for (size_t r = 0; r < m_nodes.size(); ++r) {
        Node& router = *m_nodes[r];
        if (!router.forwarder || dist[r] <= 0) {
          continue;
        }
        for (FaceId f = 0; f < router.faces.size(); ++f) {
          size_t peer = router.faces[f].peer;
          bool relays = peer == p || m_nodes[peer]->spec.role == NodeRole::ROUTER;
          if (relays && dist[peer] == dist[r] - 1) {
            router.forwarder->fib().addNextHop(producer.routePrefix(), f);
            break;
          }
        }
      }
    }
  }
}

void
Simulation::buildApps()
{
  for (const auto& pc : m_config.producers) {
    Node& node = *m_nodes.at(m_index.at(pc.node));
    if (node.faces.empty()) {
      throw ScenarioError("producer '" + pc.node + "' has no links");
    }
    ProducerState state;
    state.producer = std::make_unique<Producer>(pc);
    state.prefix = pc.prefix.toUri();
    state.received.assign(m_metrics.binCount(), 0);
    state.legit.assign(m_metrics.binCount(), 0);
    for (const char* metric : {"received", "received_legit", "received_attack", "legit_share"}) {
      m_metrics.requireSeries(pc.node, state.prefix, metric);
    }
    node.producers.push_back(std::move(state));
  }
  if (m_config.fitt.enabled) {
    for (size_t n = 0; n < m_nodes.size(); ++n) {
      // one tick chain per node serves every producer hosted there
      Time first = Time::max();
      for (const auto& ps : m_nodes[n]->producers) {
        first = std::min(first, ps.producer->config().fakeReportInterval);
      }
      if (first < m_config.duration) {
        m_scheduler.schedule(first, [this, n] { producerTick(n); });
      }
    }
  }

  auto checkRoute = [&] (size_t n, const Name& target, const std::string& what) {
    const Node& node = *m_nodes[n];
    if (node.faces.empty()) {
      throw ScenarioError(what + ": node '" + node.spec.id + "' has no links");
    }
    const Node& access = *m_nodes[node.faces[0].peer];
    if (!access.forwarder || access.forwarder->fib().lookup(target).empty()) {
      throw ScenarioError(what + ": no route toward " + target.toUri() + " from '" + node.spec.id + "'");
    }
  };

  auto makeApp = [&] (size_t n, bool attack, const Name& prefix, Time start, std::optional<Time> stop,
                      const std::string& key) {
    auto app = std::make_unique<App>();
    app->node = n;
    app->attack = attack;
    app->prefix = prefix;
    app->prefixUri = prefix.toUri();
    app->start = start;
    app->stop = std::min(stop.value_or(m_config.duration), m_config.duration);
    const std::string& id = m_nodes[n]->spec.id;
    // the stream depends on the scenario seed, the host and the app identity only
    std::seed_seq seq{static_cast<std::uint32_t>(m_config.seed), static_cast<std::uint32_t>(m_config.seed >> 32),
                      fnv1a(id), fnv1a(key)};
    app->rng.seed(seq);
    app->tag = id + "." + std::to_string(m_nodes[n]->apps.size());
    return app;
  };

  for (size_t i = 0; i < m_config.consumers.size(); ++i) {
    const auto& cc = m_config.consumers[i];
    for (const auto& id : resolveSelector(m_config.topology, cc.where)) {
      size_t n = m_index.at(id);
      checkRoute(n, cc.prefix, "consumers[" + std::to_string(i) + "]");
      auto app = makeApp(n, false, cc.prefix, cc.start, cc.stop, "consumer " + cc.prefix.toUri());
      app->consumerRate.emplace(cc.prefix, cc.rate, cc.compliant,
                                cc.rampWindow.value_or(m_config.timers.rateLimitTimer));
      app->trafficClass = cc.trafficClass;
      app->universe = cc.nameUniverse;
      m_metrics.requireSeries(id, app->prefixUri, "sent");
      m_metrics.requireSeries("all-legit", app->prefixUri, "sent");
      m_nodes[n]->apps.push_back(m_apps.size());
      m_apps.push_back(std::move(app));
    }
  }
  for (size_t i = 0; i < m_config.attacks.size(); ++i) {
    const auto& as = m_config.attacks[i];
    for (const auto& id : resolveSelector(m_config.topology, as.where)) {
      size_t n = m_index.at(id);
      checkRoute(n, as.targetPrefix, "attacks[" + std::to_string(i) + "]");
      auto app = makeApp(n, true, as.targetPrefix, as.start, as.stop,
                         std::string("attack ") + toString(as.kind) + " " + as.targetPrefix.toUri());
      app->attackRate = as.rate;
      app->generator.emplace(as.kind, as.targetPrefix, as.nameUniverse, app->tag);
      m_metrics.requireSeries(id, app->prefixUri, "attack_sent");
      m_metrics.requireSeries("all-attack", app->prefixUri, "sent");
      m_nodes[n]->apps.push_back(m_apps.size());
      m_apps.push_back(std::move(app));
    }
  }

  for (size_t a = 0; a < m_apps.size(); ++a) {
    if (m_apps[a]->start < m_apps[a]->stop) {
      m_apps[a]->pending = m_scheduler.schedule(m_apps[a]->start, [this, a] { emit(a); });
    }
  }
}

void
Simulation::emit(size_t index)
{
  App& app = *m_apps[index];
  const Time now = m_scheduler.now();
  if (now >= app.stop) {
    return;
  }

  Interest interest = app.generator ? app.generator->next(app.rng)
                                    : makeConsumerInterest(app.trafficClass, app.prefix, app.universe, app.tag,
                                                           app.counter, app.rng);
  m_isAttack[interest.nonce] = app.attack;
  const std::string& id = m_nodes[app.node]->spec.id;
  m_metrics.count(now, id, app.prefixUri, app.attack ? "attack_sent" : "sent");
  m_metrics.count(now, app.attack ? "all-attack" : "all-legit", app.prefixUri, "sent");
  send(app.node, 0, std::move(interest));

  const Rate rate = app.rate(now);
  if (rate > 0) {
    Time next = now + jitteredGap(rate, app.rng);
    if (next < app.stop) {
      app.pending = m_scheduler.schedule(next, [this, index] { emit(index); });
      return;
    }
  }
  app.pending.reset();
}

void
Simulation::repace(size_t index)
{
  App& app = *m_apps[index];
  const Time now = m_scheduler.now();
  if (!app.pending || now < app.start) {
    return;
  }
  m_scheduler.cancel(*app.pending);
  app.pending.reset();
  const Rate rate = app.rate(now);
  if (rate > 0) {
    Time next = now + jitteredGap(rate, app.rng);
    if (next < app.stop) {
      app.pending = m_scheduler.schedule(next, [this, index] { emit(index); });
    }
  }
}

void
Simulation::send(size_t node, FaceId face, Packet packet)
{
  const FaceState& fs = m_nodes[node]->faces.at(face);
  Link& link = m_links[fs.link];
  const Time now = m_scheduler.now();
  Time departure = now;
  if (link.capacity) {
    const Time tx = seconds(1.0 / *link.capacity);
    Time& busy = link.busyUntil[fs.direction];
    departure = std::max(now, busy);
    if (departure - now > tx * static_cast<std::int64_t>(LINK_QUEUE_PACKETS)) {
      m_metrics.count(now, m_nodes[node]->spec.id + ":" + m_nodes[fs.peer]->spec.id, "-", "dropped_link_queue");
      return;
    }
    busy = departure + tx;
  }
  m_scheduler.schedule(departure + link.delay,
                       [this, peer = fs.peer, peerFace = fs.peerFace, packet = std::move(packet)] {
                         deliver(peer, peerFace, packet);
                       });
}

void
Simulation::deliver(size_t node, FaceId face, const Packet& packet)
{
  Node& n = *m_nodes[node];
  m_metrics.count(m_scheduler.now(), "network", "-", "packets_delivered");
  if (!n.forwarder) {
    deliverToEndpoint(node, face, packet);
    return;
  }
  std::visit([&] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>) {
      n.forwarder->receiveInterest(face, p);
    }
    else if constexpr (std::is_same_v<T, Data>) {
      n.forwarder->receiveData(face, p);
    }
    else {
      n.forwarder->receiveNack(face, p);
    }
  }, packet);
}

void
Simulation::deliverToEndpoint(size_t node, FaceId face, const Packet& packet)
{
  Node& n = *m_nodes[node];
  const Time now = m_scheduler.now();

  if (const auto* interest = std::get_if<Interest>(&packet)) {
    for (auto& ps : n.producers) {
      if (!ps.producer->config().prefix.isPrefixOf(interest->name)) {
        continue;
      }
      auto origin = m_isAttack.find(interest->nonce);
      bool attack = origin != m_isAttack.end() && origin->second;
      size_t bin = m_metrics.binOf(now);
      ps.received[bin] += 1;
      ps.legit[bin] += attack ? 0 : 1;
      m_metrics.count(now, n.spec.id, ps.prefix, "received");
      m_metrics.count(now, n.spec.id, ps.prefix, attack ? "received_attack" : "received_legit");

      auto reply = ps.producer->onInterest(*interest, now);
      switch (reply.verdict) {
        case Producer::Verdict::STATIC_DATA:
          m_metrics.count(now, n.spec.id, ps.prefix, "served_static");
          break;
        case Producer::Verdict::DYNAMIC_DATA:
          m_metrics.count(now, n.spec.id, ps.prefix, "served_dynamic");
          break;
        case Producer::Verdict::FAKE_DETECTED:
          m_metrics.count(now, n.spec.id, ps.prefix, "fake_detected");
          break;
        case Producer::Verdict::OUT_OF_PREFIX:
          break;
      }
      if (reply.data) {
        send(node, face, std::move(*reply.data));
      }
      return;
    }
    return;
  }

  if (const auto* data = std::get_if<Data>(&packet)) {
    for (size_t a : n.apps) {
      const App& app = *m_apps[a];
      if (app.prefix.isPrefixOf(data->name)) {
        m_metrics.count(now, n.spec.id, app.prefixUri, app.attack ? "attack_data_received" : "data_received");
        break;
      }
    }
    return;
  }

  const Nack& nack = std::get<Nack>(packet);
  m_metrics.count(now, n.spec.id, nack.payload.pref().toUri(), "nack_received");
  for (size_t a : n.apps) {
    App& app = *m_apps[a];
    if (app.consumerRate && app.consumerRate->onNack(nack, now)) {
      // the pacing timer follows the new rate right away
      repace(a);
    }
  }
}

void
Simulation::producerTick(size_t node)
{
  Node& n = *m_nodes[node];
  const Time now = m_scheduler.now();
  Time nextTick = Time::max();
  for (auto& ps : n.producers) {
    const ProducerConfig& pc = ps.producer->config();
    if ((now.count() % pc.fakeReportInterval.count()) == 0) {
      for (auto& nack : ps.producer->tick(now)) {
        const auto& payload = nack.payload;
        bool fake = payload.reason() == NackReason::FAKE;
        m_nackLog.push_back(NackLogEntry{now, n.spec.id, payload.pref(), payload.reason(),
                                         fake ? 0.0 : payload.capacity(),
                                         fake ? payload.fakeList().size() : 0});
        m_metrics.count(now, n.spec.id, ps.prefix, fake ? "nack_fake_sent" : "nack_valid_sent");
        for (FaceId f = 0; f < n.faces.size(); ++f) {
          Nack copy = nack;
          copy.hopTag = f;
          send(node, f, std::move(copy));
        }
      }
    }
    Time interval = pc.fakeReportInterval;
    nextTick = std::min(nextTick, (now / interval + 1) * interval);
  }
  if (nextTick < m_config.duration) {
    m_scheduler.schedule(nextTick, [this, node] { producerTick(node); });
  }
}

void
Simulation::flushBin(size_t bin)
{
  const Time binStart = m_config.metricBin * static_cast<std::int64_t>(bin);
  const Time now = m_scheduler.now();

  for (const auto& node : m_nodes) {
    const std::string& id = node->spec.id;
    if (node->forwarder) {
      for (const auto& row : node->forwarder->counters().drain()) {
        m_metrics.count(binStart, id + ":" + m_nodes[node->faces[row.face].peer]->spec.id, row.prefix,
                        toString(row.counter), static_cast<double>(row.value));
      }
    }
    if (node->strategy) {
      std::set<std::pair<FaceId, Name>> throttled;
      for (const auto& [key, record] : node->strategy->records()) {
        for (const auto& [face, throttle] : record.perFace) {
          throttled.emplace(face, record.pref);
        }
      }
      for (const auto& [face, pref] : throttled) {
        m_metrics.gauge(bin, id + ":" + m_nodes[node->faces[face].peer]->spec.id, pref.toUri(), "limit",
                        node->strategy->effectiveLimit(face, pref));
      }
    }
    for (const auto& ps : node->producers) {
      double share = ps.received[bin] > 0 ? ps.legit[bin] / ps.received[bin] : 1.0;
      m_metrics.gauge(bin, id, ps.prefix, "legit_share", share);
    }
    for (size_t a : node->apps) {
      const App& app = *m_apps[a];
      if (app.consumerRate) {
        m_metrics.gauge(bin, id, app.prefixUri, "rate", app.consumerRate->current(now));
      }
    }
  }
}

RunResult
Simulation::run()
{
  if (m_ran) {
    throw std::logic_error("a simulation can only run once");
  }
  m_ran = true;
  m_scheduler.runUntil(m_config.duration);
  if (m_metrics.binCount() > 0) {
    flushBin(m_metrics.binCount() - 1);
  }

  RunResult result;
  result.scenario = m_config.name;
  result.seed = m_config.seed;
  result.duration = m_config.duration;
  result.metrics = MetricTable(m_metrics.samples(), toSeconds(m_config.metricBin), m_metrics.binCount());
  result.throttleLog = std::move(m_throttleLog);
  result.nackLog = std::move(m_nackLog);
  result.eventsExecuted = m_scheduler.executedCount();
  return result;
}

Forwarder*
Simulation::forwarder(const std::string& node)
{
  auto it = m_index.find(node);
  return it == m_index.end() ? nullptr : m_nodes[it->second]->forwarder.get();
}

FittStrategy*
Simulation::strategy(const std::string& node)
{
  auto it = m_index.find(node);
  return it == m_index.end() ? nullptr : m_nodes[it->second]->strategy;
}

FaceId
Simulation::faceToward(const std::string& node, const std::string& peer) const
{
  auto a = m_index.find(node);
  auto b = m_index.find(peer);
  if (a == m_index.end() || b == m_index.end()) {
    return INVALID_FACE;
  }
  const auto& faces = m_nodes[a->second]->faces;
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (faces[f].peer == b->second) {
      return f;
    }
  }
  return INVALID_FACE;
}

RunResult
runScenario(const ScenarioConfig& config)
{
  Simulation sim(config);
  return sim.run();
}

} // namespace fitt
