#include "fitt/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>

namespace fitt {

using nlohmann::json;

namespace {

const char* const VICTIM_PREFIX = "/univ1/cs/server/email";
const char* const SECOND_PREFIX = "/univ2/service/video";

bool
isIndex(const json& j)
{
  return j.is_number_integer() && j.get<std::int64_t>() >= 0;
}

[[noreturn]] void
fail(const std::string& path, const std::string& message)
{
  throw ScenarioError(path + ": " + message);
}

std::string
child(const std::string& path, const std::string& key)
{
  return path.empty() ? key : path + "." + key;
}

std::string
element(const std::string& path, size_t i)
{
  return path + "[" + std::to_string(i) + "]";
}

void
requireObject(const json& j, const std::string& path)
{
  if (!j.is_object()) {
    fail(path.empty() ? "<root>" : path, "expected an object");
  }
}

void
checkKeys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
  for (const auto& [key, value] : obj.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(), [&] (const char* a) { return key == a; });
    if (!known) {
      fail(child(path, key), "unknown field");
    }
  }
}

const json*
field(const json& obj, const char* key)
{
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double
number(const json& obj, const std::string& path, const char* key, std::optional<double> def = std::nullopt)
{
  const json* v = field(obj, key);
  if (v == nullptr) {
    if (!def) {
      fail(child(path, key), "required field missing");
    }
    return *def;
  }
  if (!v->is_number()) {
    fail(child(path, key), "expected a number");
  }
  return v->get<double>();
}

double
positive(const json& obj, const std::string& path, const char* key, std::optional<double> def = std::nullopt)
{
  double x = number(obj, path, key, def);
  if (!(x > 0)) {
    fail(child(path, key), "must be > 0");
  }
  return x;
}

double
nonNegative(const json& obj, const std::string& path, const char* key, std::optional<double> def = std::nullopt)
{
  double x = number(obj, path, key, def);
  if (!(x >= 0)) {
    fail(child(path, key), "must be >= 0");
  }
  return x;
}

std::uint64_t
count(const json& obj, const std::string& path, const char* key, std::optional<double> def = std::nullopt)
{
  double x = nonNegative(obj, path, key, def);
  if (x != std::floor(x)) {
    fail(child(path, key), "must be an integer");
  }
  return static_cast<std::uint64_t>(x);
}

std::string
text(const json& obj, const std::string& path, const char* key, std::optional<std::string> def = std::nullopt)
{
  const json* v = field(obj, key);
  if (v == nullptr) {
    if (!def) {
      fail(child(path, key), "required field missing");
    }
    return *def;
  }
  if (!v->is_string()) {
    fail(child(path, key), "expected a string");
  }
  return v->get<std::string>();
}

bool
flag(const json& obj, const std::string& path, const char* key, bool def)
{
  const json* v = field(obj, key);
  if (v == nullptr) {
    return def;
  }
  if (!v->is_boolean()) {
    fail(child(path, key), "expected true or false");
  }
  return v->get<bool>();
}

Name
name(const json& obj, const std::string& path, const char* key)
{
  auto t = text(obj, path, key);
  try {
    return Name::parse(t);
  }
  catch (const Name::Error& e) {
    fail(child(path, key), e.what());
  }
}

std::optional<Time>
optionalSeconds(const json& obj, const std::string& path, const char* key)
{
  if (field(obj, key) == nullptr) {
    return std::nullopt;
  }
  return seconds(nonNegative(obj, path, key));
}

const json&
array(const json& obj, const std::string& path, const char* key)
{
  static const json empty = json::array();
  const json* v = field(obj, key);
  if (v == nullptr) {
    return empty;
  }
  if (!v->is_array()) {
    fail(child(path, key), "expected an array");
  }
  return *v;
}

NodeSelector
selector(const json& obj, const std::string& path)
{
  NodeSelector where;
  bool hasNode = field(obj, "node") != nullptr;
  bool hasGroup = field(obj, "group") != nullptr;
  if (hasNode == hasGroup) {
    fail(path, "exactly one of 'node' or 'group' is required");
  }
  if (hasNode) {
    where.node = text(obj, path, "node");
  }
  else {
    where.group = text(obj, path, "group");
  }
  if (const json* range = field(obj, "range")) {
    if (!hasGroup) {
      fail(child(path, "range"), "only valid together with 'group'");
    }
    if (!range->is_array() || range->size() != 2 || !isIndex((*range)[0]) ||
        !isIndex((*range)[1])) {
      fail(child(path, "range"), "expected [begin, end] with non-negative integers");
    }
    where.begin = (*range)[0].get<size_t>();
    where.end = (*range)[1].get<size_t>();
    if (where.begin > where.end) {
      fail(child(path, "range"), "begin must not exceed end");
    }
  }
  return where;
}

TopologySpec
parseTopology(const json& obj, const std::string& path)
{
  requireObject(obj, path);
  TopologySpec topo;
  const std::string generator = text(obj, path, "generator", "");

  if (generator == "four_as_mesh") {
    checkKeys(obj, path, {"generator", "as_count", "edges_per_as", "legit_clients", "attackers", "server_as",
                          "link_delay_ms", "overrides"});
    MeshParams p;
    p.asCount = static_cast<int>(count(obj, path, "as_count", 4));
    p.edgesPerAs = static_cast<int>(count(obj, path, "edges_per_as", 3));
    p.legitClients = static_cast<int>(count(obj, path, "legit_clients", 12));
    p.attackers = static_cast<int>(count(obj, path, "attackers", 60));
    p.linkDelay = milliseconds(nonNegative(obj, path, "link_delay_ms", 10));
    if (const json* servers = field(obj, "server_as")) {
      if (!servers->is_array() || servers->empty()) {
        fail(child(path, "server_as"), "expected a non-empty array of AS indices");
      }
      p.serverAs.clear();
      for (size_t i = 0; i < servers->size(); ++i) {
        if (!isIndex((*servers)[i])) {
          fail(element(child(path, "server_as"), i), "expected an AS index");
        }
        p.serverAs.push_back((*servers)[i].get<int>());
      }
    }
    try {
      topo = makeFourAsMesh(p);
    }
    catch (const ScenarioError&) {
      throw;
    }
    catch (const Error& e) {
      fail(path, e.what());
    }
  }
  else if (generator == "toy") {
    checkKeys(obj, path, {"generator", "link_delay_ms", "overrides"});
    topo = makeToyTopology(milliseconds(nonNegative(obj, path, "link_delay_ms", 10)));
  }
  else if (generator.empty()) {
    checkKeys(obj, path, {"nodes", "links", "overrides"});
    const json& nodes = array(obj, path, "nodes");
    for (size_t i = 0; i < nodes.size(); ++i) {
      const auto p = element(child(path, "nodes"), i);
      const json& n = nodes[i];
      requireObject(n, p);
      checkKeys(n, p, {"id", "role", "edge", "fitt", "revert_timer", "rate_limit_timer", "groups"});
      NodeSpec spec;
      spec.id = text(n, p, "id");
      try {
        spec.role = parseNodeRole(text(n, p, "role", "router"));
      }
      catch (const Error& e) {
        fail(child(p, "role"), e.what());
      }
      spec.isEdge = flag(n, p, "edge", false);
      spec.fittEnabled = flag(n, p, "fitt", true);
      spec.revertTimer = optionalSeconds(n, p, "revert_timer");
      spec.rateLimitTimer = optionalSeconds(n, p, "rate_limit_timer");
      const json& groups = array(n, p, "groups");
      for (size_t g = 0; g < groups.size(); ++g) {
        if (!groups[g].is_string()) {
          fail(element(child(p, "groups"), g), "expected a string");
        }
        spec.groups.push_back(groups[g].get<std::string>());
      }
      if (topo.findNode(spec.id) != nullptr) {
        fail(child(p, "id"), "duplicate node id '" + spec.id + "'");
      }
      topo.nodes.push_back(std::move(spec));
    }
    const json& links = array(obj, path, "links");
    for (size_t i = 0; i < links.size(); ++i) {
      const auto p = element(child(path, "links"), i);
      const json& l = links[i];
      requireObject(l, p);
      checkKeys(l, p, {"a", "b", "delay_ms", "capacity"});
      LinkSpec spec;
      spec.a = text(l, p, "a");
      spec.b = text(l, p, "b");
      spec.delay = milliseconds(nonNegative(l, p, "delay_ms", 10));
      if (field(l, "capacity") != nullptr) {
        spec.capacity = positive(l, p, "capacity");
      }
      for (const auto* end : {&spec.a, &spec.b}) {
        if (topo.findNode(*end) == nullptr) {
          fail(p, "unknown node '" + *end + "'");
        }
      }
      if (spec.a == spec.b) {
        fail(p, "self loop on '" + spec.a + "'");
      }
      topo.links.push_back(std::move(spec));
    }
  }
  else {
    fail(child(path, "generator"), "unknown generator '" + generator + "' (expected four_as_mesh or toy)");
  }

  const json& overrides = array(obj, path, "overrides");
  for (size_t i = 0; i < overrides.size(); ++i) {
    const auto p = element(child(path, "overrides"), i);
    const json& o = overrides[i];
    requireObject(o, p);
    checkKeys(o, p, {"node", "edge", "fitt", "revert_timer", "rate_limit_timer"});
    auto id = text(o, p, "node");
    auto it = std::find_if(topo.nodes.begin(), topo.nodes.end(), [&] (const NodeSpec& n) { return n.id == id; });
    if (it == topo.nodes.end()) {
      fail(child(p, "node"), "unknown node '" + id + "'");
    }
    it->isEdge = flag(o, p, "edge", it->isEdge);
    it->fittEnabled = flag(o, p, "fitt", it->fittEnabled);
    if (auto t = optionalSeconds(o, p, "revert_timer")) {
      it->revertTimer = t;
    }
    if (auto t = optionalSeconds(o, p, "rate_limit_timer")) {
      it->rateLimitTimer = t;
    }
  }
  return topo;
}

void
checkEndpoint(const TopologySpec& topo, const NodeSelector& where, const std::string& path)
{
  std::vector<std::string> ids;
  if (!where.node.empty()) {
    if (topo.findNode(where.node) == nullptr) {
      fail(child(path, "node"), "unknown node '" + where.node + "'");
    }
    ids.push_back(where.node);
  }
  else {
    ids = resolveSelector(topo, where);
    if (ids.empty()) {
      fail(child(path, "group"), "selects no nodes");
    }
  }
  for (const auto& id : ids) {
    if (topo.findNode(id)->role == NodeRole::ROUTER) {
      fail(path, "applications cannot run on router '" + id + "'");
    }
  }
}

json
meshBase(const json& servers = json::array({0}))
{
  return json{
    {"duration", 30},
    {"seed", 1},
    {"metric_bin", 1.0},
    {"cs_capacity", 0},
    {"timers", {{"pit_lifetime", 2.0}, {"revert_timer", 5.0}, {"rate_limit_timer", 3.0}}},
    {"fitt", {{"enabled", true}, {"compliance_tolerance", 0.05}, {"blacklist_floor", 1.0},
              {"keep_blacklist_on_revert", false}}},
    {"topology", {{"generator", "four_as_mesh"}, {"as_count", 4}, {"edges_per_as", 3},
                  {"legit_clients", 12}, {"attackers", 60}, {"server_as", servers}, {"link_delay_ms", 10}}},
  };
}

json
victimProducer(double capacity)
{
  return json{{"node", "server0"}, {"prefix", VICTIM_PREFIX}, {"capacity", capacity},
              {"static_name_count", 500}, {"freshness", 4.0}, {"fake_report_interval", 1.0},
              {"nack_refresh_interval", 1.0}};
}

json
legitClients(const char* prefix = VICTIM_PREFIX)
{
  return json{{"group", "legit"}, {"prefix", prefix}, {"rate", 40}, {"traffic_class", "I3"}, {"start", 0}};
}

json
singleVictimAttack(const char* name, const char* kind)
{
  json doc = meshBase();
  doc["name"] = name;
  doc["producers"] = json::array({victimProducer(1500)});
  doc["consumers"] = json::array({legitClients()});
  doc["attacks"] = json::array({{{"group", "attacker"}, {"kind", kind}, {"rate", 100},
                                 {"target_prefix", VICTIM_PREFIX}, {"start", 3}}});
  return doc;
}

json
i1Resilience(const char* name, int csCapacity)
{
  json doc = meshBase();
  doc["name"] = name;
  doc["cs_capacity"] = csCapacity;
  doc["fitt"]["enabled"] = false;
  doc["topology"]["legit_clients"] = 0;
  json producer = victimProducer(1e9);
  producer["static_name_count"] = 500;
  doc["producers"] = json::array({producer});
  doc["consumers"] = json::array();
  doc["attacks"] = json::array({{{"group", "attacker"}, {"kind", "I1"}, {"rate", 100},
                                 {"target_prefix", VICTIM_PREFIX}, {"name_universe", 500}, {"start", 3}}});
  return doc;
}

json
twoPrefix()
{
  json doc = meshBase(json::array({0, 2}));
  doc["name"] = "two_prefix";
  json second = victimProducer(750);
  second["node"] = "server1";
  second["prefix"] = SECOND_PREFIX;
  doc["producers"] = json::array({victimProducer(750), second});
  json legitA = legitClients();
  legitA["range"] = {0, 6};
  json legitB = legitClients(SECOND_PREFIX);
  legitB["range"] = {6, 12};
  doc["consumers"] = json::array({legitA, legitB});
  doc["attacks"] = json::array({
    {{"group", "attacker"}, {"range", {0, 30}}, {"kind", "I3"}, {"rate", 100}, {"target_prefix", VICTIM_PREFIX},
     {"start", 2}},
    {{"group", "attacker"}, {"range", {30, 60}}, {"kind", "I3"}, {"rate", 100}, {"target_prefix", SECOND_PREFIX},
     {"start", 4}},
  });
  return doc;
}

json
granularity()
{
  json doc = meshBase(json::array({0, 2}));
  doc["name"] = "granularity";
  json second = victimProducer(1500);
  second["node"] = "server1";
  second["prefix"] = SECOND_PREFIX;
  doc["producers"] = json::array({victimProducer(1500), second});
  json background = {{"group", "attacker"}, {"prefix", SECOND_PREFIX}, {"rate", 20}, {"traffic_class", "I3"},
                     {"start", 0}};
  doc["consumers"] = json::array({legitClients(), background});
  doc["attacks"] = json::array({{{"group", "attacker"}, {"kind", "I3"}, {"rate", 100},
                                 {"target_prefix", VICTIM_PREFIX}, {"start", 3}}});
  return doc;
}

json
toyUntrustedRouter()
{
  // R4 runs no FITT, so R3 acts as the edge toward it
  json doc = meshBase();
  doc["name"] = "toy_untrusted_router";
  doc["topology"] = {{"generator", "toy"}, {"link_delay_ms", 10},
                     {"overrides", json::array({{{"node", "R4"}, {"edge", false}, {"fitt", false}},
                                                {{"node", "R3"}, {"edge", false}}})}};
  doc["producers"] = json::array({{{"node", "S"}, {"prefix", "/univ1/service/email"}, {"announce", "/univ1"},
                                   {"capacity", 150}, {"static_name_count", 500}, {"freshness", 4.0}}});
  doc["consumers"] = json::array({
    {{"group", "legit"}, {"prefix", "/univ1/service/email"}, {"rate", 40}, {"traffic_class", "I3"}, {"start", 0}},
  });
  doc["attacks"] = json::array({{{"group", "attacker"}, {"kind", "I3"}, {"rate", 100},
                                 {"target_prefix", "/univ1/service/email"}, {"start", 3}}});
  return doc;
}

} // namespace

std::vector<std::string>
resolveSelector(const TopologySpec& topology, const NodeSelector& where)
{
  if (!where.node.empty()) {
    return {where.node};
  }
  auto ids = topology.group(where.group);
  size_t end = std::min(where.end, ids.size());
  size_t begin = std::min(where.begin, end);
  return std::vector<std::string>(ids.begin() + begin, ids.begin() + end);
}

ScenarioConfig
parseScenario(const json& doc)
{
  requireObject(doc, "");
  checkKeys(doc, "", {"name", "duration", "seed", "metric_bin", "cs_capacity", "timers", "fitt", "topology",
                      "producers", "consumers", "attacks"});
  ScenarioConfig cfg;
  cfg.name = text(doc, "", "name", "custom");
  cfg.duration = seconds(positive(doc, "", "duration"));
  if (const json* seed = field(doc, "seed")) {
    if (!isIndex(*seed)) {
      fail("seed", "expected a non-negative integer");
    }
    cfg.seed = seed->get<std::uint64_t>();
  }
  cfg.metricBin = seconds(positive(doc, "", "metric_bin", 1.0));
  cfg.csCapacity = count(doc, "", "cs_capacity", 0);

  if (const json* timers = field(doc, "timers")) {
    requireObject(*timers, "timers");
    checkKeys(*timers, "timers", {"pit_lifetime", "revert_timer", "rate_limit_timer"});
    cfg.timers.pitLifetime = seconds(positive(*timers, "timers", "pit_lifetime", 2.0));
    cfg.timers.revertTimer = seconds(positive(*timers, "timers", "revert_timer", 5.0));
    cfg.timers.rateLimitTimer = seconds(positive(*timers, "timers", "rate_limit_timer", 3.0));
  }
  if (const json* f = field(doc, "fitt")) {
    requireObject(*f, "fitt");
    checkKeys(*f, "fitt", {"enabled", "compliance_tolerance", "blacklist_floor", "keep_blacklist_on_revert"});
    cfg.fitt.enabled = flag(*f, "fitt", "enabled", true);
    cfg.fitt.complianceTolerance = nonNegative(*f, "fitt", "compliance_tolerance", 0.05);
    cfg.fitt.blacklistFloor = nonNegative(*f, "fitt", "blacklist_floor", 1.0);
    cfg.fitt.keepBlacklistOnRevert = flag(*f, "fitt", "keep_blacklist_on_revert", false);
  }

  const json* topology = field(doc, "topology");
  if (topology == nullptr) {
    fail("topology", "required field missing");
  }
  cfg.topology = parseTopology(*topology, "topology");

  Time latestStart{0};
  const json& producers = array(doc, "", "producers");
  for (size_t i = 0; i < producers.size(); ++i) {
    const auto p = element("producers", i);
    const json& o = producers[i];
    requireObject(o, p);
    checkKeys(o, p, {"node", "prefix", "announce", "capacity", "static_name_count", "freshness",
                     "fake_report_interval", "nack_refresh_interval", "rate_window"});
    ProducerConfig pc;
    pc.node = text(o, p, "node");
    checkEndpoint(cfg.topology, NodeSelector{pc.node, {}, 0, 0}, p);
    pc.prefix = name(o, p, "prefix");
    if (field(o, "announce") != nullptr) {
      pc.announce = name(o, p, "announce");
      if (!pc.announce->isPrefixOf(pc.prefix)) {
        fail(child(p, "announce"), "must be a prefix of " + pc.prefix.toUri());
      }
    }
    pc.capacity = positive(o, p, "capacity");
    pc.staticNameCount = count(o, p, "static_name_count", 500);
    pc.freshness = seconds(nonNegative(o, p, "freshness", 4.0));
    pc.fakeReportInterval = seconds(positive(o, p, "fake_report_interval", 1.0));
    pc.nackRefreshInterval = seconds(positive(o, p, "nack_refresh_interval", 1.0));
    pc.rateWindow = seconds(positive(o, p, "rate_window", 1.0));
    cfg.producers.push_back(std::move(pc));
  }

  const json& consumers = array(doc, "", "consumers");
  for (size_t i = 0; i < consumers.size(); ++i) {
    const auto p = element("consumers", i);
    const json& o = consumers[i];
    requireObject(o, p);
    checkKeys(o, p, {"node", "group", "range", "prefix", "rate", "traffic_class", "name_universe", "start", "stop",
                     "compliant", "ramp_window"});
    ConsumerConfig cc;
    cc.where = selector(o, p);
    checkEndpoint(cfg.topology, cc.where, p);
    cc.prefix = name(o, p, "prefix");
    cc.rate = positive(o, p, "rate");
    try {
      cc.trafficClass = parseTrafficClass(text(o, p, "traffic_class", "I3"));
    }
    catch (const Error& e) {
      fail(child(p, "traffic_class"), e.what());
    }
    cc.nameUniverse = count(o, p, "name_universe", 500);
    if (cc.trafficClass == TrafficClass::I1 && cc.nameUniverse == 0) {
      fail(child(p, "name_universe"), "must be > 0 for I1 traffic");
    }
    cc.start = seconds(nonNegative(o, p, "start", 0));
    cc.stop = optionalSeconds(o, p, "stop");
    cc.compliant = flag(o, p, "compliant", true);
    cc.rampWindow = optionalSeconds(o, p, "ramp_window");
    latestStart = std::max(latestStart, cc.start);
    cfg.consumers.push_back(std::move(cc));
  }

  const json& attacks = array(doc, "", "attacks");
  for (size_t i = 0; i < attacks.size(); ++i) {
    const auto p = element("attacks", i);
    const json& o = attacks[i];
    requireObject(o, p);
    checkKeys(o, p, {"node", "group", "range", "kind", "rate", "target_prefix", "name_universe", "start", "stop"});
    AttackSpec as;
    as.where = selector(o, p);
    checkEndpoint(cfg.topology, as.where, p);
    try {
      as.kind = parseAttackKind(text(o, p, "kind"));
    }
    catch (const Error& e) {
      fail(child(p, "kind"), e.what());
    }
    as.rate = positive(o, p, "rate");
    as.targetPrefix = name(o, p, "target_prefix");
    as.nameUniverse = count(o, p, "name_universe", 500);
    if (as.kind == AttackKind::I1 && as.nameUniverse == 0) {
      fail(child(p, "name_universe"), "must be > 0 for I1 attacks");
    }
    as.start = seconds(nonNegative(o, p, "start", 0));
    as.stop = optionalSeconds(o, p, "stop");
    latestStart = std::max(latestStart, as.start);
    cfg.attacks.push_back(std::move(as));
  }

  if (cfg.duration <= latestStart) {
    fail("duration", "must exceed the latest application start time");
  }
  return cfg;
}

std::vector<std::string>
builtinScenarioNames()
{
  return {"fake_attack", "valid_attack", "mixed_attack", "i1_resilience_nocache", "i1_resilience_cache",
          "two_prefix", "granularity", "toy_untrusted_router"};
}

bool
isBuiltinScenario(std::string_view name)
{
  auto names = builtinScenarioNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

json
builtinScenarioJson(std::string_view name)
{
  if (name == "fake_attack") {
    return singleVictimAttack("fake_attack", "I2");
  }
  if (name == "valid_attack") {
    return singleVictimAttack("valid_attack", "I3");
  }
  if (name == "mixed_attack") {
    return singleVictimAttack("mixed_attack", "MIXED");
  }
  if (name == "i1_resilience_nocache") {
    return i1Resilience("i1_resilience_nocache", 0);
  }
  if (name == "i1_resilience_cache") {
    return i1Resilience("i1_resilience_cache", 200);
  }
  if (name == "two_prefix") {
    return twoPrefix();
  }
  if (name == "granularity") {
    return granularity();
  }
  if (name == "toy_untrusted_router") {
    return toyUntrustedRouter();
  }
  throw ScenarioError("unknown built-in scenario '" + std::string(name) + "'");
}

ScenarioConfig
loadScenario(std::string_view nameOrPath)
{
  if (isBuiltinScenario(nameOrPath)) {
    return parseScenario(builtinScenarioJson(nameOrPath));
  }
  std::ifstream in{std::string(nameOrPath)};
  if (!in) {
    throw ScenarioError("'" + std::string(nameOrPath) + "' is neither a built-in scenario nor a readable file");
  }
  json doc;
  try {
    doc = json::parse(in);
  }
  catch (const json::parse_error& e) {
    throw ScenarioError(std::string(nameOrPath) + ": " + e.what());
  }
  return parseScenario(doc);
}

} // namespace fitt
