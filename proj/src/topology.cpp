#include "fitt/topology.hpp"

#include <algorithm>

namespace fitt {

const char*
toString(NodeRole role)
{
  switch (role) {
    case NodeRole::ROUTER: return "router";
    case NodeRole::PRODUCER: return "producer";
    case NodeRole::CONSUMER: return "consumer";
    case NodeRole::ATTACKER: return "attacker";
  }
  return "?";
}

NodeRole
parseNodeRole(const std::string& text)
{
  for (auto role : {NodeRole::ROUTER, NodeRole::PRODUCER, NodeRole::CONSUMER, NodeRole::ATTACKER}) {
    if (text == toString(role)) {
      return role;
    }
  }
  throw Error("unknown node role '" + text + "'");
}

const NodeSpec*
TopologySpec::findNode(const std::string& id) const
{
  auto it = std::find_if(nodes.begin(), nodes.end(), [&] (const NodeSpec& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

std::vector<std::string>
TopologySpec::group(const std::string& name) const
{
  std::vector<std::string> ids;
  for (const auto& n : nodes) {
    if (std::find(n.groups.begin(), n.groups.end(), name) != n.groups.end()) {
      ids.push_back(n.id);
    }
  }
  return ids;
}

TopologySpec
makeFourAsMesh(const MeshParams& params)
{
  if (params.asCount < 1 || params.edgesPerAs < 1) {
    throw Error("mesh needs at least one AS and one edge router per AS");
  }
  TopologySpec topo;
  auto addLink = [&] (const std::string& a, const std::string& b) {
    topo.links.push_back(LinkSpec{a, b, params.linkDelay, std::nullopt});
  };

  std::vector<std::string> edges;
  for (int a = 0; a < params.asCount; ++a) {
    topo.nodes.push_back(NodeSpec{"core" + std::to_string(a), NodeRole::ROUTER, false, true, {}, {}, {"core"}});
  }
  for (int a = 0; a < params.asCount; ++a) {
    for (int b = a + 1; b < params.asCount; ++b) {
      addLink("core" + std::to_string(a), "core" + std::to_string(b));
    }
  }
  for (int a = 0; a < params.asCount; ++a) {
    for (int k = 0; k < params.edgesPerAs; ++k) {
      auto id = "edge" + std::to_string(a) + "-" + std::to_string(k);
      topo.nodes.push_back(NodeSpec{id, NodeRole::ROUTER, true, true, {}, {}, {"edge"}});
      addLink("core" + std::to_string(a), id);
      edges.push_back(id);
    }
  }

  for (size_t i = 0; i < params.serverAs.size(); ++i) {
    int as = params.serverAs[i];
    if (as < 0 || as >= params.asCount) {
      throw Error("server AS index " + std::to_string(as) + " out of range");
    }
    auto id = "server" + std::to_string(i);
    topo.nodes.push_back(NodeSpec{id, NodeRole::PRODUCER, false, true, {}, {}, {"server"}});
    addLink("core" + std::to_string(as), id);
  }

  size_t slot = 0;
  auto addClient = [&] (const std::string& id, NodeRole role, const std::string& group) {
    topo.nodes.push_back(NodeSpec{id, role, false, true, {}, {}, {group, "client"}});
    addLink(edges[slot % edges.size()], id);
    ++slot;
  };
  for (int i = 0; i < params.legitClients; ++i) {
    addClient("legit" + std::to_string(i), NodeRole::CONSUMER, "legit");
  }
  for (int j = 0; j < params.attackers; ++j) {
    addClient("attacker" + std::to_string(j), NodeRole::ATTACKER, "attacker");
  }
  return topo;
}

TopologySpec
makeToyTopology(Time linkDelay)
{
  TopologySpec topo;
  auto router = [&] (const std::string& id, bool edge) {
    topo.nodes.push_back(NodeSpec{id, NodeRole::ROUTER, edge, true, {}, {}, {edge ? "edge" : "core"}});
  };
  router("R1", false);
  router("R2", true);
  router("R3", false);
  router("R4", true);
  router("R5", true);
  topo.nodes.push_back(NodeSpec{"S", NodeRole::PRODUCER, false, true, {}, {}, {"server"}});
  for (int i = 1; i <= 6; ++i) {
    bool bad = i <= 3;
    topo.nodes.push_back(NodeSpec{"C" + std::to_string(i), bad ? NodeRole::ATTACKER : NodeRole::CONSUMER,
                                  false, true, {}, {}, {bad ? "attacker" : "legit", "client"}});
  }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
         {"S", "R1"}, {"R1", "R2"}, {"R1", "R3"}, {"R2", "R3"}, {"R3", "R4"}, {"R3", "R5"},
         {"R2", "C1"}, {"R2", "C2"}, {"R4", "C3"}, {"R4", "C4"}, {"R5", "C5"}, {"R5", "C6"}}) {
    topo.links.push_back(LinkSpec{a, b, linkDelay, std::nullopt});
  }
  return topo;
}

} // namespace fitt
