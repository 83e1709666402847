#include "fitt/scheduler.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace fitt {
namespace {

TEST(Scheduler, EmptyQueueAdvancesClock)
{
  Scheduler s;
  s.runUntil(seconds(3));
  EXPECT_EQ(s.now(), seconds(3));
  EXPECT_EQ(s.executedCount(), 0u);
  EXPECT_EQ(s.pendingCount(), 0u);
}

TEST(Scheduler, EqualTimesRunInSchedulingOrder)
{
  Scheduler s;
  std::vector<int> order;
  s.schedule(seconds(1), [&] { order.push_back(1); });
  s.schedule(seconds(1), [&] { order.push_back(2); });
  s.schedule(seconds(0.5), [&] { order.push_back(0); });
  s.schedule(seconds(1), [&] { order.push_back(3); });
  s.runUntil(seconds(2));
  EXPECT_EQ(order, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Scheduler, EventsSeeTheirOwnTime)
{
  Scheduler s;
  Time seen{-1};
  s.schedule(milliseconds(250), [&] { seen = s.now(); });
  s.runUntil(seconds(1));
  EXPECT_EQ(seen, milliseconds(250));
}

TEST(Scheduler, RunUntilIsInclusiveAndStops)
{
  Scheduler s;
  int fired = 0;
  s.schedule(seconds(1), [&] { ++fired; });
  s.schedule(seconds(1.000001), [&] { ++fired; });
  s.runUntil(seconds(1));
  EXPECT_EQ(fired, 1);
  EXPECT_EQ(s.pendingCount(), 1u);
}

TEST(Scheduler, CancelledEventsDoNotFire)
{
  Scheduler s;
  int fired = 0;
  auto id = s.schedule(seconds(1), [&] { ++fired; });
  s.cancel(id);
  s.runUntil(seconds(2));
  EXPECT_EQ(fired, 0);
  // cancelling after the fact is harmless
  auto id2 = s.schedule(seconds(3), [&] { ++fired; });
  s.runUntil(seconds(4));
  s.cancel(id2);
  EXPECT_EQ(fired, 1);
  EXPECT_EQ(s.pendingCount(), 0u);
}

TEST(Scheduler, EventsMayScheduleMore)
{
  Scheduler s;
  int chain = 0;
  std::function<void()> step = [&] {
    if (++chain < 5) {
      s.scheduleAfter(seconds(1), step);
    }
  };
  s.schedule(Time{0}, step);
  s.runUntil(seconds(10));
  EXPECT_EQ(chain, 5);
}

TEST(Scheduler, PastEventsAreRejected)
{
  Scheduler s;
  s.runUntil(seconds(1));
  EXPECT_THROW(s.schedule(seconds(0.5), [] {}), std::logic_error);
}

} // namespace
} // namespace fitt
