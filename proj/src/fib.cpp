#include "fitt/fib.hpp"

#include <algorithm>
#include <functional>

namespace fitt {

Fib::Fib()
  : m_root(std::make_unique<Node>())
{
}

void
Fib::addNextHop(const Name& prefix, FaceId face)
{
  Node* node = m_root.get();
  for (const auto& c : prefix.components()) {
    auto& child = node->children[c];
    if (!child) {
      child = std::make_unique<Node>();
    }
    node = child.get();
  }
  if (!node->entry) {
    node->entry = FibEntry{prefix, {}};
    ++m_size;
  }
  auto& hops = node->entry->nextHops;
  if (std::find(hops.begin(), hops.end(), face) == hops.end()) {
    hops.push_back(face);
  }
}

bool
Fib::erase(const Name& prefix)
{
  Node* node = m_root.get();
  for (const auto& c : prefix.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      return false;
    }
    node = it->second.get();
  }
  if (!node->entry) {
    return false;
  }
  node->entry.reset();
  --m_size;
  return true;
}

const FibEntry*
Fib::findExactMatch(const Name& prefix) const
{
  const Node* node = m_root.get();
  for (const auto& c : prefix.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      return nullptr;
    }
    node = it->second.get();
  }
  return node->entry ? &*node->entry : nullptr;
}

const FibEntry*
Fib::findLongestPrefixMatch(const Name& name) const
{
  const Node* node = m_root.get();
  const FibEntry* best = node->entry ? &*node->entry : nullptr;
  for (const auto& c : name.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      break;
    }
    node = it->second.get();
    if (node->entry) {
      best = &*node->entry;
    }
  }
  return best;
}

std::vector<FaceId>
Fib::lookup(const Name& name) const
{
  const FibEntry* entry = findLongestPrefixMatch(name);
  return entry ? entry->nextHops : std::vector<FaceId>{};
}

bool
Fib::hasRouteCovering(const Name& name, FaceId face) const
{
  auto routes = [face] (const Node* node) {
    return node->entry &&
           std::find(node->entry->nextHops.begin(), node->entry->nextHops.end(), face) !=
             node->entry->nextHops.end();
  };

  const Node* node = m_root.get();
  if (routes(node)) {
    return true;
  }
  for (const auto& c : name.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end()) {
      return false;
    }
    node = it->second.get();
    if (routes(node)) {
      return true;
    }
  }
  return false;
}

std::vector<FibEntry>
Fib::entries() const
{
  std::vector<FibEntry> out;
  std::function<void(const Node&)> walk = [&] (const Node& node) {
    if (node.entry) {
      out.push_back(*node.entry);
    }
    for (const auto& [c, child] : node.children) {
      walk(*child);
    }
  };
  walk(*m_root);
  return out;
}

} // namespace fitt
