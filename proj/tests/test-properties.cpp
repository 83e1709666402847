#include "property-checks.hpp"

#include <gtest/gtest.h>

namespace fitt::props {
namespace {

void
expectHolds(const Outcome& o)
{
  EXPECT_TRUE(o.passed) << o.name << ": " << o.detail;
}

TEST(Properties, LongestPrefixMatch)
{
  expectHolds(lpmMatchesBruteForce(11, 1000));
}

TEST(Properties, AggregationSingleTransmission)
{
  expectHolds(aggregationSendsOnce(12, 5000));
  expectHolds(aggregationSendsOnce(99, 5000));
}

TEST(Properties, FlowParity)
{
  expectHolds(flowParity(13, 5000));
  expectHolds(flowParity(98, 5000));
}

TEST(Properties, WeightNormalization)
{
  expectHolds(weightsSumToOne(14, 1000));
}

TEST(Properties, LimitMergeMonotonic)
{
  expectHolds(mergeIsMonotonic(15, 2000));
}

TEST(Properties, ThrottleRateBound)
{
  expectHolds(tokenBucketBound(16));
  expectHolds(tokenBucketBound(97));
}

TEST(Properties, NackValidation)
{
  expectHolds(nackValidationExample());
}

TEST(Properties, FakePartition)
{
  expectHolds(fakePartitionSubsetCover(17, 500));
}

} // namespace
} // namespace fitt::props
