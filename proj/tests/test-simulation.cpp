#include "fitt/acceptance.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace fitt {
namespace {

using nlohmann::json;

json
chain(double delayMs)
{
  return json{
    {"duration", 2},
    {"metric_bin", 0.1},
    {"topology",
     {{"nodes", json::array({{{"id", "c"}, {"role", "consumer"}},
                             {{"id", "r"}, {"edge", true}},
                             {{"id", "s"}, {"role", "producer"}}})},
      {"links", json::array({{{"a", "c"}, {"b", "r"}, {"delay_ms", delayMs}},
                             {{"a", "r"}, {"b", "s"}, {"delay_ms", delayMs}}})}}},
  };
}

size_t
firstNonZero(const std::vector<double>& v)
{
  auto it = std::find_if(v.begin(), v.end(), [] (double x) { return x > 0; });
  return static_cast<size_t>(it - v.begin());
}

TEST(Simulation, EmptyRunStillHasEveryBin)
{
  auto doc = chain(10);
  doc["metric_bin"] = 1.0;
  auto run = runScenario(parseScenario(doc));
  EXPECT_EQ(run.metrics.binCount(), 2u);
  auto csv = toCsv(run);
  EXPECT_NE(csv.find("0.000000,network,-,packets_delivered,0.000000"), std::string::npos);
  EXPECT_NE(csv.find("1.000000,network,-,packets_delivered,0.000000"), std::string::npos);
}

TEST(Simulation, LinkDelayShapesArrivalTimes)
{
  auto doc = chain(200);
  doc["producers"] = json::array({{{"node", "s"}, {"prefix", "/svc"}, {"capacity", 100}}});
  doc["consumers"] = json::array({{{"node", "c"}, {"prefix", "/svc"}, {"rate", 1}}});
  auto run = runScenario(parseScenario(doc));
  // sent at 0, two 200 ms hops each way
  EXPECT_EQ(firstNonZero(run.metrics.series("c", "/svc", "sent")), 0u);
  EXPECT_EQ(firstNonZero(run.metrics.series("s", "/svc", "received")), 4u);
  EXPECT_EQ(firstNonZero(run.metrics.series("c", "/svc", "data_received")), 8u);
}

TEST(Simulation, ConsumerDataMatchesProducerService)
{
  auto doc = chain(5);
  doc["duration"] = 5;
  doc["metric_bin"] = 1.0;
  doc["producers"] = json::array({{{"node", "s"}, {"prefix", "/svc"}, {"capacity", 100}}});
  doc["consumers"] = json::array({{{"node", "c"}, {"prefix", "/svc"}, {"rate", 40}}});
  auto run = runScenario(parseScenario(doc));
  auto sent = run.metrics.series("c", "/svc", "sent");
  auto got = run.metrics.series("c", "/svc", "data_received");
  auto served = run.metrics.series("s", "/svc", "served_dynamic");
  for (size_t b = 1; b < 4; ++b) {
    EXPECT_NEAR(sent[b], 40, 3);
    EXPECT_NEAR(got[b], 40, 3);
    EXPECT_NEAR(served[b], 40, 3);
  }
  EXPECT_DOUBLE_EQ(run.metrics.series("s", "/svc", "legit_share")[2], 1.0);
}

TEST(Simulation, AccessorsExposeRouters)
{
  auto doc = chain(10);
  doc["producers"] = json::array({{{"node", "s"}, {"prefix", "/svc"}, {"capacity", 100}}});
  Simulation sim(parseScenario(doc));
  EXPECT_NE(sim.forwarder("r"), nullptr);
  EXPECT_NE(sim.strategy("r"), nullptr);
  EXPECT_EQ(sim.forwarder("c"), nullptr);
  EXPECT_EQ(sim.forwarder("zz"), nullptr);
  FaceId toS = sim.faceToward("r", "s");
  ASSERT_NE(toS, INVALID_FACE);
  EXPECT_EQ(sim.forwarder("r")->fib().lookup(Name::parse("/svc/x")), std::vector<FaceId>{toS});
  EXPECT_EQ(sim.faceToward("r", "r"), INVALID_FACE);
  sim.run();
  EXPECT_THROW(sim.run(), std::logic_error);
}

TEST(Simulation, UnreachableProducerIsAConfigError)
{
  json doc = {
    {"duration", 2},
    {"topology",
     {{"nodes", json::array({{{"id", "c"}, {"role", "consumer"}},
                             {{"id", "r1"}},
                             {{"id", "r2"}},
                             {{"id", "s"}, {"role", "producer"}}})},
      {"links", json::array({{{"a", "c"}, {"b", "r1"}}, {{"a", "r2"}, {"b", "s"}}})}}},
    {"producers", json::array({{{"node", "s"}, {"prefix", "/svc"}, {"capacity", 100}}})},
    {"consumers", json::array({{{"node", "c"}, {"prefix", "/svc"}, {"rate", 10}}})},
  };
  EXPECT_THROW(Simulation{parseScenario(doc)}, ScenarioError);
}

TEST(Simulation, FakeAttackSmoke)
{
  auto cfg = loadScenario("fake_attack");
  cfg.duration = seconds(6);
  auto run = runScenario(cfg);
  ASSERT_FALSE(run.nackLog.empty());
  EXPECT_EQ(run.nackLog.front().reason, NackReason::FAKE);
  EXPECT_GE(run.nackLog.front().time, seconds(3));
  auto fake = run.metrics.series("server0", "/univ1/cs/server/email", "fake_detected");
  EXPECT_EQ(fake[1], 0);
  EXPECT_GT(fake[3], 1000);
  EXPECT_LT(fake[5], 60);
  bool blocked = std::any_of(run.throttleLog.begin(), run.throttleLog.end(), [] (const ThrottleLogEntry& e) {
    return e.event.kind == ThrottleEvent::INSTALL && e.event.limit == 0;
  });
  EXPECT_TRUE(blocked);
}

TEST(Simulation, SameSeedSameBytesDifferentSeedDifferentBytes)
{
  auto cfg = loadScenario("valid_attack");
  cfg.duration = seconds(5);
  auto a = toCsv(runScenario(cfg));
  auto b = toCsv(runScenario(cfg));
  EXPECT_EQ(a, b);
  cfg.seed = 2;
  EXPECT_NE(a, toCsv(runScenario(cfg)));
}

} // namespace
} // namespace fitt
