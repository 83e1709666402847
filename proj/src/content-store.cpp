#include "fitt/content-store.hpp"

namespace fitt {

std::optional<Data>
ContentStore::find(const Name& name, Time now)
{
  auto it = m_index.find(name);
  if (it == m_index.end()) {
    return std::nullopt;
  }
  auto entry = it->second;
  if (now - entry->inserted >= entry->data.freshness) {
    m_lru.erase(entry);
    m_index.erase(it);
    return std::nullopt;
  }
  m_lru.splice(m_lru.begin(), m_lru, entry);
  return entry->data;
}

void
ContentStore::insert(const Data& data, Time now)
{
  if (m_capacity == 0 || data.freshness <= Time(0)) {
    return;
  }
  auto it = m_index.find(data.name);
  if (it != m_index.end()) {
    it->second->data = data;
    it->second->inserted = now;
    m_lru.splice(m_lru.begin(), m_lru, it->second);
    return;
  }
  m_lru.push_front(Entry{data, now});
  m_index.emplace(data.name, m_lru.begin());
  while (m_index.size() > m_capacity) {
    m_index.erase(m_lru.back().data.name);
    m_lru.pop_back();
  }
}

} // namespace fitt
