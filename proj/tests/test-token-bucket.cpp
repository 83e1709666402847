#include "fitt/token-bucket.hpp"

#include <gtest/gtest.h>

namespace fitt {
namespace {

TEST(TokenBucket, StartsEmpty)
{
  TokenBucket b(10, Time{0});
  EXPECT_FALSE(b.tryConsume(Time{0}));
  EXPECT_FALSE(b.tryConsume(milliseconds(99)));
  EXPECT_TRUE(b.tryConsume(milliseconds(100)));
  EXPECT_FALSE(b.tryConsume(milliseconds(100)));
}

TEST(TokenBucket, DepthIsOneSecondOfTokens)
{
  TokenBucket b(10, Time{0});
  EXPECT_TRUE(b.tryConsume(seconds(100)));
  EXPECT_NEAR(b.tokens(), 9, 1e-9);
  int burst = 1;
  while (b.tryConsume(seconds(100))) {
    ++burst;
  }
  EXPECT_EQ(burst, 10);
}

TEST(TokenBucket, LongRunRateMatchesLimit)
{
  TokenBucket b(40, Time{0});
  int accepted = 0;
  // offered 100/s for 10 s
  for (int i = 0; i < 1000; ++i) {
    accepted += b.tryConsume(milliseconds(10.0 * i)) ? 1 : 0;
  }
  EXPECT_GE(accepted, 380);
  EXPECT_LE(accepted, 420);
}

TEST(TokenBucket, LoweringTheRateClampsStoredTokens)
{
  TokenBucket b(100, Time{0});
  b.setRate(100, seconds(5));
  EXPECT_NEAR(b.tokens(), 100, 1e-9);
  b.setRate(4, seconds(5));
  EXPECT_NEAR(b.tokens(), 4, 1e-9);
  EXPECT_EQ(b.rate(), 4);
}

TEST(TokenBucket, ZeroRateNeverAdmits)
{
  TokenBucket b(0, Time{0});
  EXPECT_FALSE(b.tryConsume(seconds(1000)));
}

} // namespace
} // namespace fitt
