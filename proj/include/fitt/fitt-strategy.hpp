#ifndef FITT_FITT_STRATEGY_HPP
#define FITT_FITT_STRATEGY_HPP

#include "fitt/forwarder.hpp"
#include "fitt/token-bucket.hpp"

#include <map>
#include <set>

namespace fitt {

/// Accepts a NACK only if \p arrivalFace is a next hop of a route covering the reported prefix.
bool
validateNack(FaceId arrivalFace, const Nack& nack, const Fib& fib);

/// Union of the incoming faces of every pending Interest under \p pref.
std::set<FaceId>
suspectFaces(const Name& pref, const Pit& pit);

/// Equal share 1/|suspects| for each suspect face. \p suspects must not be empty.
std::map<FaceId, double>
computeWeights(const std::set<FaceId>& suspects);

/**
 * \brief Splits a fake name list by the incoming faces recorded in the PIT.
 *
 * Names without a pending entry are dropped; a name aggregated from several faces
 * appears in the partition of each of them. Within a partition names keep their order.
 */
std::map<FaceId, std::vector<Name>>
partitionFakeList(const std::vector<Name>& fakeList, const Pit& pit);

/// Rate-limiting state of one downstream face under one reaction.
struct FaceThrottle
{
  /// Permitted Interests/s; 0 means BLOCKED. Faces without a throttle are unlimited.
  Rate limit = 0;
  /// Offered (pre-drop) Interests since windowStart.
  std::uint64_t measuredCount = 0;
  Time windowStart{0};
  bool blacklisted = false;
  TokenBucket bucket;

  bool
  isBlocked() const
  {
    return limit == 0;
  }
};

/// Per-(prefix, reason) reaction state at one node.
struct FittRecord
{
  Name pref;
  NackReason reason;
  std::map<FaceId, FaceThrottle> perFace;
  Time revertDeadline{0};
  bool revertScheduled = false;
  bool rateLimitTimerRunning = false;
  /// Distinguishes a record from an earlier one with the same key, for stale timers.
  std::uint64_t generation = 0;
};

struct FittOptions
{
  /// Edge routers throttle every suspect face; other nodes only relay pushback.
  bool isEdge = false;
  Time revertTimer = seconds(5);
  Time rateLimitTimer = seconds(3);
  /// Measured rate may exceed the limit by this fraction and still count as compliant.
  double complianceTolerance = 0.05;
  /// Limits below this many Interests/s become BLOCKED.
  Rate blacklistFloor = 1.0;
  bool keepBlacklistOnRevert = false;
  /// Faces toward non-FITT routers. Pushback stops there and the face itself is throttled.
  std::set<FaceId> opaqueFaces;
};

struct ThrottleEvent
{
  enum Kind {
    INSTALL,
    TIGHTEN,
    HALVE,
    BLACKLIST,
    LIFT,
    REVERT,
  };

  Kind kind;
  Time time;
  FaceId face;
  Name pref;
  NackReason reason;
  Rate limit;
};

const char*
toString(ThrottleEvent::Kind kind);

/**
 * \brief FITT forwarding strategy: victim-driven pushback, edge throttling and reinforcement.
 */
class FittStrategy : public Strategy
{
public:
  using EventListener = std::function<void(const ThrottleEvent&)>;
  using RecordKey = std::pair<Name, NackReason>;

  FittStrategy(Forwarder& forwarder, FittOptions options);

  bool
  admitInterest(FaceId face, const Name& name, Time now) override;

  bool
  validateNack(FaceId face, const Nack& nack) const override;

  std::vector<std::pair<FaceId, Nack>>
  handleNack(FaceId face, const Nack& nack, Time now) override;

  const Name*
  matchedPrefix(const Name& name) const override;

  /**
   * \brief Applies the per-face limit rule for one reaction.
   *
   * VALID installs \p capacity, FAKE installs 0. An existing throttle for the same
   * reaction only ever tightens.
   */
  void
  installLimit(FaceId face, const Name& pref, NackReason reason, Rate capacity, Time now);

  /// Reinforcement check for a VALID record; normally driven by the RateLimitTimer.
  void
  onRateLimitTimer(const RecordKey& key, std::uint64_t generation);

  void
  onRevertTimer(const RecordKey& key, std::uint64_t generation);

  const FittRecord*
  findRecord(const Name& pref, NackReason reason) const;

  const std::map<RecordKey, FittRecord>&
  records() const
  {
    return m_records;
  }

  /// Minimum limit over every reaction at exactly \p pref throttling \p face; UNLIMITED_RATE if none.
  Rate
  effectiveLimit(FaceId face, const Name& pref) const;

  bool
  throttlesFace(FaceId face) const
  {
    return m_options.isEdge || isOpaque(face);
  }

  bool
  isOpaque(FaceId face) const
  {
    return m_options.opaqueFaces.count(face) > 0;
  }

  const FittOptions&
  options() const
  {
    return m_options;
  }

  void
  setEventListener(EventListener listener)
  {
    m_listener = std::move(listener);
  }

private:
  FittRecord&
  getOrCreateRecord(const Name& pref, NackReason reason);

  void
  refreshRevert(FittRecord& record, Time now);

  void
  ensureRateLimitTimer(FittRecord& record);

  void
  notify(ThrottleEvent::Kind kind, Time now, FaceId face, const FittRecord& record, Rate limit);

  void
  sendLiftNotice(FaceId face, const Name& pref);

private:
  Forwarder& m_forwarder;
  FittOptions m_options;
  std::map<RecordKey, FittRecord> m_records;
  std::uint64_t m_nextGeneration = 1;
  EventListener m_listener;
};

} // namespace fitt

#endif // FITT_FITT_STRATEGY_HPP
