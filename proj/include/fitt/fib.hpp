#ifndef FITT_FIB_HPP
#define FITT_FIB_HPP

#include "fitt/name.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace fitt {

struct FibEntry
{
  Name prefix;
  std::vector<FaceId> nextHops;
};

/**
 * \brief Forwarding table keyed by name prefix, organised as a component trie.
 */
class Fib
{
public:
  Fib();

  /// Adds \p face as a next hop of \p prefix, creating the entry if needed.
  void
  addNextHop(const Name& prefix, FaceId face);

  /// Removes the entry for \p prefix. Returns false if there was none.
  bool
  erase(const Name& prefix);

  /// Next hops of the longest prefix of \p name present in the table; empty if none matches.
  std::vector<FaceId>
  lookup(const Name& name) const;

  const FibEntry*
  findExactMatch(const Name& prefix) const;

  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  /// True if some entry on the path to \p name (inclusive) lists \p face as a next hop.
  bool
  hasRouteCovering(const Name& name, FaceId face) const;

  std::vector<FibEntry>
  entries() const;

  size_t
  size() const
  {
    return m_size;
  }

private:
  struct Node
  {
    std::map<std::string, std::unique_ptr<Node>> children;
    std::optional<FibEntry> entry;
  };

  std::unique_ptr<Node> m_root;
  size_t m_size = 0;
};

} // namespace fitt

#endif // FITT_FIB_HPP
