#include "fitt/scenario.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

namespace fitt {
namespace {

using nlohmann::json;

json
minimal()
{
  return json::parse(R"({
    "duration": 5,
    "topology": {
      "nodes": [
        {"id": "c", "role": "consumer"},
        {"id": "r", "edge": true},
        {"id": "s", "role": "producer"}
      ],
      "links": [{"a": "c", "b": "r"}, {"a": "r", "b": "s", "delay_ms": 5}]
    },
    "producers": [{"node": "s", "prefix": "/svc", "capacity": 100}],
    "consumers": [{"node": "c", "prefix": "/svc", "rate": 10}]
  })");
}

std::string
errorOf(const json& doc)
{
  try {
    parseScenario(doc);
  }
  catch (const ScenarioError& e) {
    return e.what();
  }
  return "";
}

TEST(Scenario, MinimalDocumentGetsDefaults)
{
  auto cfg = parseScenario(minimal());
  EXPECT_EQ(cfg.name, "custom");
  EXPECT_EQ(cfg.duration, seconds(5));
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.timers.pitLifetime, seconds(2));
  EXPECT_EQ(cfg.timers.revertTimer, seconds(5));
  EXPECT_EQ(cfg.timers.rateLimitTimer, seconds(3));
  EXPECT_TRUE(cfg.fitt.enabled);
  ASSERT_EQ(cfg.topology.links.size(), 2u);
  EXPECT_EQ(cfg.topology.links[1].delay, milliseconds(5));
  EXPECT_EQ(cfg.producers.at(0).staticNameCount, 500u);
  EXPECT_EQ(cfg.producers.at(0).freshness, seconds(4));
  EXPECT_EQ(cfg.consumers.at(0).trafficClass, TrafficClass::I3);
}

TEST(Scenario, ErrorsNameTheFieldPath)
{
  auto doc = minimal();
  doc["producers"][0]["capacity"] = 0;
  EXPECT_EQ(errorOf(doc), "producers[0].capacity: must be > 0");

  doc = minimal();
  doc["consumers"][0]["rat"] = 3;
  EXPECT_EQ(errorOf(doc), "consumers[0].rat: unknown field");

  doc = minimal();
  doc["timers"] = {{"pit_lifetime", "long"}};
  EXPECT_EQ(errorOf(doc), "timers.pit_lifetime: expected a number");

  doc = minimal();
  doc["topology"]["links"][1]["b"] = "x";
  EXPECT_EQ(errorOf(doc), "topology.links[1]: unknown node 'x'");

  doc = minimal();
  doc.erase("topology");
  EXPECT_EQ(errorOf(doc), "topology: required field missing");

  doc = minimal();
  doc["seed"] = -3;
  EXPECT_EQ(errorOf(doc), "seed: expected a non-negative integer");

  doc = minimal();
  doc["consumers"][0]["prefix"] = "/a//b";
  EXPECT_NE(errorOf(doc).find("consumers[0].prefix"), std::string::npos);

  doc = minimal();
  doc["consumers"][0]["node"] = "r";
  EXPECT_NE(errorOf(doc).find("cannot run on router"), std::string::npos);

  doc = minimal();
  doc["consumers"][0]["start"] = 5;
  EXPECT_NE(errorOf(doc).find("duration"), std::string::npos);

  doc = minimal();
  doc["attacks"] = json::array({{{"node", "c"}, {"kind", "I9"}, {"rate", 1}, {"target_prefix", "/svc"}}});
  EXPECT_EQ(errorOf(doc).rfind("attacks[0].kind:", 0), 0u);
}

TEST(Scenario, SelectorsAndRanges)
{
  auto doc = builtinScenarioJson("two_prefix");
  auto cfg = parseScenario(doc);
  ASSERT_EQ(cfg.attacks.size(), 2u);
  auto first = resolveSelector(cfg.topology, cfg.attacks[0].where);
  auto second = resolveSelector(cfg.topology, cfg.attacks[1].where);
  EXPECT_EQ(first.size(), 30u);
  EXPECT_EQ(second.size(), 30u);
  EXPECT_EQ(first.front(), "attacker0");
  EXPECT_EQ(second.front(), "attacker30");

  doc["attacks"][0]["range"] = {10, 5};
  EXPECT_EQ(errorOf(doc), "attacks[0].range: begin must not exceed end");
}

TEST(Scenario, BuiltinFakeAttack)
{
  auto cfg = loadScenario("fake_attack");
  ASSERT_EQ(cfg.attacks.size(), 1u);
  EXPECT_EQ(cfg.attacks[0].kind, AttackKind::I2);
  EXPECT_EQ(resolveSelector(cfg.topology, cfg.attacks[0].where).size(), 60u);
  EXPECT_DOUBLE_EQ(cfg.attacks[0].rate, 100);
  EXPECT_EQ(cfg.attacks[0].start, seconds(3));
  ASSERT_EQ(cfg.consumers.size(), 1u);
  EXPECT_EQ(resolveSelector(cfg.topology, cfg.consumers[0].where).size(), 12u);
  EXPECT_DOUBLE_EQ(cfg.consumers[0].rate, 40);
}

TEST(Scenario, BuiltinValidAttack)
{
  auto cfg = loadScenario("valid_attack");
  EXPECT_EQ(cfg.attacks.at(0).kind, AttackKind::I3);
  EXPECT_DOUBLE_EQ(cfg.producers.at(0).capacity, 1500);
  EXPECT_EQ(cfg.timers.rateLimitTimer, seconds(3));
}

TEST(Scenario, BuiltinTwoPrefix)
{
  auto cfg = loadScenario("two_prefix");
  ASSERT_EQ(cfg.producers.size(), 2u);
  EXPECT_DOUBLE_EQ(cfg.producers[0].capacity, 750);
  EXPECT_DOUBLE_EQ(cfg.producers[1].capacity, 750);
  EXPECT_EQ(cfg.attacks.at(0).start, seconds(2));
  EXPECT_EQ(cfg.attacks.at(1).start, seconds(4));
  EXPECT_NE(cfg.producers[0].prefix, cfg.producers[1].prefix);
}

TEST(Scenario, EveryBuiltinParses)
{
  for (const auto& name : builtinScenarioNames()) {
    EXPECT_TRUE(isBuiltinScenario(name));
    EXPECT_NO_THROW(loadScenario(name)) << name;
    EXPECT_EQ(loadScenario(name).name, name);
  }
  EXPECT_FALSE(isBuiltinScenario("nope"));
  EXPECT_THROW(builtinScenarioJson("nope"), ScenarioError);
  EXPECT_THROW(loadScenario("nope"), ScenarioError);
}

TEST(Scenario, LoadsFromFile)
{
  const std::string path = ::testing::TempDir() + "fitt-scenario-test.json";
  {
    std::ofstream f(path);
    f << minimal().dump();
  }
  auto cfg = loadScenario(path);
  EXPECT_EQ(cfg.producers.at(0).prefix, Name{"svc"});
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  EXPECT_THROW(loadScenario(path), ScenarioError);
  std::remove(path.c_str());
}

TEST(Topology, ToyHasTwelveLinks)
{
  auto t = makeToyTopology();
  EXPECT_EQ(t.links.size(), 12u);
  int routers = 0;
  int clients = 0;
  int servers = 0;
  for (const auto& n : t.nodes) {
    routers += n.role == NodeRole::ROUTER;
    clients += n.role == NodeRole::CONSUMER || n.role == NodeRole::ATTACKER;
    servers += n.role == NodeRole::PRODUCER;
  }
  EXPECT_EQ(routers, 5);
  EXPECT_EQ(clients, 6);
  EXPECT_EQ(servers, 1);
}

TEST(Topology, MeshClientsHangOffEdgeRouters)
{
  auto t = makeFourAsMesh(MeshParams{});
  EXPECT_EQ(t.group("attacker").size(), 60u);
  EXPECT_EQ(t.group("legit").size(), 12u);
  std::set<std::string> attackerEdges;
  for (const auto& n : t.nodes) {
    if (n.role != NodeRole::CONSUMER && n.role != NodeRole::ATTACKER) {
      continue;
    }
    int edgeNeighbours = 0;
    int degree = 0;
    for (const auto& l : t.links) {
      const std::string* peer = l.a == n.id ? &l.b : l.b == n.id ? &l.a : nullptr;
      if (peer == nullptr) {
        continue;
      }
      ++degree;
      const NodeSpec* p = t.findNode(*peer);
      ASSERT_NE(p, nullptr);
      if (p->role == NodeRole::ROUTER && p->isEdge) {
        ++edgeNeighbours;
        if (n.role == NodeRole::ATTACKER) {
          attackerEdges.insert(p->id);
        }
      }
    }
    EXPECT_EQ(degree, 1) << n.id;
    EXPECT_EQ(edgeNeighbours, 1) << n.id;
  }
  // attackers are spread over every AS
  std::set<char> ases;
  for (const auto& e : attackerEdges) {
    ases.insert(e.at(4));
  }
  EXPECT_EQ(ases.size(), 4u);
}

} // namespace
} // namespace fitt
