#ifndef FITT_TOKEN_BUCKET_HPP
#define FITT_TOKEN_BUCKET_HPP

#include "fitt/common.hpp"

#include <algorithm>

namespace fitt {

/**
 * \brief Continuous-refill token bucket holding at most one second worth of tokens.
 *
 * The bucket starts empty, so over any interval of length W the number of admitted
 * Interests is bounded by rate * W + rate.
 */
class TokenBucket
{
public:
  TokenBucket() = default;

  TokenBucket(Rate rate, Time now)
    : m_rate(rate)
    , m_lastRefill(now)
  {
  }

  Rate
  rate() const
  {
    return m_rate;
  }

  /// Changes the refill rate, clamping stored tokens to the new depth.
  void
  setRate(Rate rate, Time now)
  {
    refill(now);
    m_rate = rate;
    m_tokens = std::min(m_tokens, depth());
  }

  bool
  tryConsume(Time now)
  {
    refill(now);
    if (m_tokens >= 1.0) {
      m_tokens -= 1.0;
      return true;
    }
    return false;
  }

  double
  tokens() const
  {
    return m_tokens;
  }

private:
  double
  depth() const
  {
    return m_rate * 1.0;
  }

  void
  refill(Time now)
  {
    if (now > m_lastRefill) {
      m_tokens = std::min(depth(), m_tokens + m_rate * toSeconds(now - m_lastRefill));
      m_lastRefill = now;
    }
  }

private:
  Rate m_rate = 0;
  double m_tokens = 0;
  Time m_lastRefill{0};
};

} // namespace fitt

#endif // FITT_TOKEN_BUCKET_HPP
