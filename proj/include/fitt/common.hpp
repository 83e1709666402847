#ifndef FITT_COMMON_HPP
#define FITT_COMMON_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fitt {

/// Simulated time since the start of a run, at microsecond resolution.
using Time = std::chrono::microseconds;

/// Identifies one adjacency of a node. Faces are numbered densely from 0.
using FaceId = std::uint32_t;

inline constexpr FaceId INVALID_FACE = std::numeric_limits<FaceId>::max();

/// Interests per second.
using Rate = double;

inline constexpr Rate UNLIMITED_RATE = std::numeric_limits<double>::infinity();

inline Time
seconds(double s)
{
  return Time(static_cast<std::int64_t>(std::llround(s * 1e6)));
}

inline Time
milliseconds(double ms)
{
  return Time(static_cast<std::int64_t>(std::llround(ms * 1e3)));
}

inline double
toSeconds(Time t)
{
  return static_cast<double>(t.count()) / 1e6;
}

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace fitt

#endif // FITT_COMMON_HPP
