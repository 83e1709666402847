#ifndef FITT_TOPOLOGY_HPP
#define FITT_TOPOLOGY_HPP

#include "fitt/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fitt {

enum class NodeRole {
  ROUTER,
  PRODUCER,
  CONSUMER,
  ATTACKER,
};

const char*
toString(NodeRole role);

NodeRole
parseNodeRole(const std::string& text);

struct NodeSpec
{
  std::string id;
  NodeRole role = NodeRole::ROUTER;
  bool isEdge = false;
  /// Routers without FITT forward normally but drop every NACK.
  bool fittEnabled = true;
  std::optional<Time> revertTimer;
  std::optional<Time> rateLimitTimer;
  /// Named groups used by scenario files to place applications.
  std::vector<std::string> groups;
};

struct LinkSpec
{
  std::string a;
  std::string b;
  Time delay = milliseconds(10);
  /// Packets per second per direction; unset means unlimited.
  std::optional<double> capacity;
};

struct TopologySpec
{
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;

  const NodeSpec*
  findNode(const std::string& id) const;

  /// Node ids in the given group, in declaration order.
  std::vector<std::string>
  group(const std::string& name) const;
};

struct MeshParams
{
  int asCount = 4;
  int edgesPerAs = 3;
  int legitClients = 12;
  int attackers = 60;
  /// AS index each server hangs off; server i is named "server<i>".
  std::vector<int> serverAs{0};
  Time linkDelay = milliseconds(10);
};

/**
 * \brief Meshed multi-AS overlay.
 *
 * Each AS has one core router ("core<a>") and edgesPerAs FITT edge routers ("edge<a>-<k>");
 * cores are fully meshed. Clients are dealt round-robin over every edge router, legitimate
 * clients first ("legit<i>", group "legit"), then attackers ("attacker<j>", group "attacker"),
 * so attackers are spread across all ASes and every client is one hop from an edge router.
 */
TopologySpec
makeFourAsMesh(const MeshParams& params);

/**
 * \brief Five-router example overlay with six clients and one server.
 *
 * S-R1, R1-R2, R1-R3, R2-R3, R3-R4, R3-R5, R2-{C1,C2}, R4-{C3,C4}, R5-{C5,C6}.
 * R2, R4 and R5 are edge routers; C1..C3 are attackers.
 */
TopologySpec
makeToyTopology(Time linkDelay = milliseconds(10));

} // namespace fitt

#endif // FITT_TOPOLOGY_HPP
