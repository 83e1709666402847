#include "fitt/pit.hpp"

namespace fitt {

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_table.find(name);
  return it == m_table.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::find(const Name& name) const
{
  auto it = m_table.find(name);
  return it == m_table.end() ? nullptr : &it->second;
}

std::pair<PitEntry*, bool>
Pit::insert(const Name& name)
{
  auto [it, isNew] = m_table.try_emplace(name);
  if (isNew) {
    it->second.name = name;
  }
  return {&it->second, isNew};
}

void
Pit::erase(const Name& name)
{
  m_table.erase(name);
}

} // namespace fitt
