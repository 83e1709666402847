#include "fitt/packets.hpp"

#include <algorithm>

namespace fitt {

const char*
toString(NackReason reason)
{
  switch (reason) {
    case NackReason::FAKE:
      return "FAKE";
    case NackReason::VALID:
      return "VALID";
  }
  return "?";
}

FittNackPayload
FittNackPayload::makeValid(Name pref, Rate capacity)
{
  if (!(capacity > 0)) {
    throw Error("VALID report requires a positive capacity");
  }
  FittNackPayload p;
  p.m_reason = NackReason::VALID;
  p.m_pref = std::move(pref);
  p.m_capacity = capacity;
  return p;
}

FittNackPayload
FittNackPayload::makeFake(Name pref, std::vector<Name> fakeList)
{
  if (fakeList.empty()) {
    throw Error("FAKE report requires a non-empty fake name list");
  }
  bool scoped = std::all_of(fakeList.begin(), fakeList.end(), [&] (const Name& n) {
    return pref.isPrefixOf(n) && n.size() > pref.size();
  });
  if (!scoped) {
    throw Error("every fake name must extend " + pref.toUri());
  }
  FittNackPayload p;
  p.m_reason = NackReason::FAKE;
  p.m_pref = std::move(pref);
  p.m_fakeList = std::move(fakeList);
  return p;
}

Rate
FittNackPayload::capacity() const
{
  if (!m_capacity) {
    throw Error("FAKE report carries no capacity");
  }
  return *m_capacity;
}

const std::vector<Name>&
FittNackPayload::fakeList() const
{
  if (!m_fakeList) {
    throw Error("VALID report carries no fake name list");
  }
  return *m_fakeList;
}

} // namespace fitt
