#ifndef FITT_PACKETS_HPP
#define FITT_PACKETS_HPP

#include "fitt/name.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace fitt {

struct Interest
{
  Name name;
  std::uint64_t nonce = 0;
  /// Set on requests whose Data has to be produced per request.
  bool dynamic = false;
};

struct Data
{
  Name name;
  /// Zero means the Data must never be cached.
  Time freshness{0};
  std::uint32_t payloadSize = 1024;
};

/// Reason code carried by a victim report.
enum class NackReason {
  FAKE,
  VALID,
};

const char*
toString(NackReason reason);

/**
 * \brief Attack report carried in a FITT NACK.
 *
 * A VALID report carries the capacity C (or C_i once split), a FAKE report carries the
 * fake Interest names observed under \p pref. A VALID report with infinite capacity announces
 * that the throttle on the receiving face was lifted.
 */
class FittNackPayload
{
public:
  static FittNackPayload
  makeValid(Name pref, Rate capacity);

  static FittNackPayload
  makeFake(Name pref, std::vector<Name> fakeList);

  NackReason
  reason() const
  {
    return m_reason;
  }

  const Name&
  pref() const
  {
    return m_pref;
  }

  /// Only meaningful when reason() == VALID.
  Rate
  capacity() const;

  /// Only meaningful when reason() == FAKE.
  const std::vector<Name>&
  fakeList() const;

  bool
  isLiftNotice() const
  {
    return m_reason == NackReason::VALID && *m_capacity == UNLIMITED_RATE;
  }

private:
  FittNackPayload() = default;

private:
  NackReason m_reason = NackReason::VALID;
  Name m_pref;
  std::optional<Rate> m_capacity;
  std::optional<std::vector<Name>> m_fakeList;
};

struct Nack
{
  FittNackPayload payload;
  /// Sending face at the previous hop; a NACK is never forwarded as-is.
  std::uint64_t hopTag = 0;
};

using Packet = std::variant<Interest, Data, Nack>;

} // namespace fitt

#endif // FITT_PACKETS_HPP
