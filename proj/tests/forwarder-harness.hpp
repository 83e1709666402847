#ifndef FITT_TESTS_FORWARDER_HARNESS_HPP
#define FITT_TESTS_FORWARDER_HARNESS_HPP

#include "fitt/fitt-strategy.hpp"

#include <string>
#include <vector>

namespace fitt::testing {

/// One forwarder whose outgoing packets are captured. Face 0 leads upstream toward /p.
struct ForwarderHarness
{
  struct Sent
  {
    FaceId face;
    Packet packet;
    Time at;
  };

  Scheduler scheduler;
  std::vector<Sent> sent;
  Forwarder forwarder;
  FittStrategy* strategy = nullptr;
  std::vector<ThrottleEvent> events;
  std::uint64_t nextNonce = 1;

  explicit
  ForwarderHarness(ForwarderOptions options = {})
    : forwarder(scheduler, options,
                [this] (FaceId f, Packet p) { sent.push_back(Sent{f, std::move(p), scheduler.now()}); })
  {
    forwarder.fib().addNextHop(Name{"p"}, 0);
  }

  FittStrategy&
  enableFitt(FittOptions options)
  {
    auto s = std::make_unique<FittStrategy>(forwarder, std::move(options));
    strategy = s.get();
    strategy->setEventListener([this] (const ThrottleEvent& e) { events.push_back(e); });
    forwarder.setStrategy(std::move(s));
    return *strategy;
  }

  void
  interest(FaceId face, const std::string& uri, bool dynamic = false)
  {
    forwarder.receiveInterest(face, Interest{Name::parse(uri), nextNonce++, dynamic});
  }

  template<typename T>
  std::vector<std::pair<FaceId, T>>
  sentOf() const
  {
    std::vector<std::pair<FaceId, T>> out;
    for (const auto& s : sent) {
      if (std::holds_alternative<T>(s.packet)) {
        out.emplace_back(s.face, std::get<T>(s.packet));
      }
    }
    return out;
  }

  /// Schedules a steady stream of distinct Interests under /p on \p face in [from, to).
  void
  stream(FaceId face, Rate rate, Time from, Time to, const std::string& tag)
  {
    const Time gap = seconds(1.0 / rate);
    int i = 0;
    for (Time t = from; t < to; t += gap, ++i) {
      scheduler.schedule(t, [this, face, uri = "/p/" + tag + std::to_string(i)] { interest(face, uri); });
    }
  }

  size_t
  countEvents(ThrottleEvent::Kind kind, FaceId face) const
  {
    size_t n = 0;
    for (const auto& e : events) {
      n += (e.kind == kind && e.face == face) ? 1 : 0;
    }
    return n;
  }
};

} // namespace fitt::testing

#endif // FITT_TESTS_FORWARDER_HARNESS_HPP
