#ifndef FITT_PIT_HPP
#define FITT_PIT_HPP

#include "fitt/name.hpp"
#include "fitt/scheduler.hpp"

#include <map>
#include <set>
#include <unordered_set>

namespace fitt {

struct PitEntry
{
  Name name;
  /// Downstream faces waiting for Data, with the last nonce seen on each.
  std::map<FaceId, std::uint64_t> inFaces;
  std::set<FaceId> outFaces;
  std::unordered_set<std::uint64_t> nonces;
  Time expiry{0};
  EventId expiryEvent = 0;

  bool
  hasInFace(FaceId face) const
  {
    return inFaces.count(face) > 0;
  }
};

/**
 * \brief Pending Interest table.
 *
 * Entries are kept in name order so all entries under a prefix form one contiguous range.
 */
class Pit
{
public:
  using Table = std::map<Name, PitEntry>;

  PitEntry*
  find(const Name& name);

  const PitEntry*
  find(const Name& name) const;

  /// Returns the entry for \p name and whether it was newly created.
  std::pair<PitEntry*, bool>
  insert(const Name& name);

  void
  erase(const Name& name);

  size_t
  size() const
  {
    return m_table.size();
  }

  /// Calls \p fn for every entry whose name has \p prefix as a prefix.
  template<typename Fn>
  void
  forEachUnder(const Name& prefix, Fn&& fn) const
  {
    for (auto it = m_table.lower_bound(prefix); it != m_table.end() && prefix.isPrefixOf(it->first); ++it) {
      fn(it->second);
    }
  }

  const Table&
  table() const
  {
    return m_table;
  }

private:
  Table m_table;
};

} // namespace fitt

#endif // FITT_PIT_HPP
