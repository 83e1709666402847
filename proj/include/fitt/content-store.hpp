#ifndef FITT_CONTENT_STORE_HPP
#define FITT_CONTENT_STORE_HPP

#include "fitt/packets.hpp"

#include <list>
#include <optional>
#include <unordered_map>

namespace fitt {

/**
 * \brief Bounded LRU cache of Data packets with freshness expiry.
 *
 * A cached Data is returned only while now - insertTime < freshness. Stale entries are
 * dropped lazily when looked up or when they reach the LRU tail.
 */
class ContentStore
{
public:
  explicit
  ContentStore(size_t capacity = 0)
    : m_capacity(capacity)
  {
  }

  size_t
  capacity() const
  {
    return m_capacity;
  }

  size_t
  size() const
  {
    return m_index.size();
  }

  /// Returns a fresh Data for \p name and marks it most recently used.
  std::optional<Data>
  find(const Name& name, Time now);

  /// Inserts or refreshes \p data. Data with zero freshness is never stored.
  void
  insert(const Data& data, Time now);

private:
  struct Entry
  {
    Data data;
    Time inserted;
  };

  using List = std::list<Entry>;

  size_t m_capacity;
  List m_lru; // front is most recently used
  std::unordered_map<Name, List::iterator> m_index;
};

} // namespace fitt

#endif // FITT_CONTENT_STORE_HPP
