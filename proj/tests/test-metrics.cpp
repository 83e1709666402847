#include "fitt/metrics.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace fitt {
namespace {

TEST(MetricRecorder, BinCountRoundsUp)
{
  EXPECT_EQ(MetricRecorder(seconds(1), seconds(2)).binCount(), 2u);
  EXPECT_EQ(MetricRecorder(seconds(1), seconds(2.5)).binCount(), 3u);
  EXPECT_EQ(MetricRecorder(seconds(0.5), seconds(2)).binCount(), 4u);
  EXPECT_THROW(MetricRecorder(Time{0}, seconds(2)), Error);
}

TEST(MetricRecorder, EndOfRunFallsInLastBin)
{
  MetricRecorder m(seconds(1), seconds(2));
  EXPECT_EQ(m.binOf(seconds(0.999)), 0u);
  EXPECT_EQ(m.binOf(seconds(1)), 1u);
  EXPECT_EQ(m.binOf(seconds(2)), 1u);
}

TEST(MetricRecorder, CountsBecomeRatesGaugesStay)
{
  MetricRecorder m(seconds(0.5), seconds(1));
  m.count(seconds(0.1), "n", "-", "x");
  m.count(seconds(0.2), "n", "-", "x", 2);
  m.gauge(1, "n", "-", "g", 7.5);
  auto s = m.samples();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0].timeBin, 0);
  EXPECT_EQ(s[0].metric, "x");
  EXPECT_DOUBLE_EQ(s[0].value, 6); // 3 events in half a second
  EXPECT_DOUBLE_EQ(s[1].timeBin, 0.5);
  EXPECT_DOUBLE_EQ(s[1].value, 7.5);
}

TEST(MetricRecorder, RequiredSeriesFillEveryBin)
{
  MetricRecorder m(seconds(1), seconds(2));
  m.requireSeries("network", "-", "packets_delivered");
  auto s = m.samples();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0].timeBin, 0);
  EXPECT_DOUBLE_EQ(s[1].timeBin, 1);
  EXPECT_DOUBLE_EQ(s[0].value, 0);
}

TEST(MetricRecorder, RowsAreSorted)
{
  MetricRecorder m(seconds(1), seconds(2));
  m.count(seconds(1.5), "a", "-", "x");
  m.count(seconds(0.5), "b", "-", "x");
  m.count(seconds(0.5), "a", "-", "y");
  auto s = m.samples();
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].node, "a");
  EXPECT_EQ(s[1].node, "b");
  EXPECT_DOUBLE_EQ(s[2].timeBin, 1);
}

TEST(MetricTable, SeriesWithMissingBins)
{
  MetricTable t({{0, "n", "-", "x", 3}, {2, "n", "-", "x", 5}}, 1.0, 3);
  EXPECT_EQ(t.series("n", "-", "x"), (std::vector<double>{3, 0, 5}));
  EXPECT_EQ(t.series("n", "-", "y", -1), (std::vector<double>{-1, -1, -1}));
  EXPECT_TRUE(t.hasSeries("n", "-", "x"));
  EXPECT_FALSE(t.hasSeries("n", "-", "y"));
}

TEST(Csv, HeaderAndFixedDecimals)
{
  std::ostringstream os;
  writeCsv(os, {{1, "server0", "/univ1", "received", 480}, {1, "edge0-0:core0", "-", "limit", UNLIMITED_RATE}});
  EXPECT_EQ(os.str(), "time_bin,node,prefix,metric,value\n"
                      "1.000000,server0,/univ1,received,480.000000\n"
                      "1.000000,edge0-0:core0,-,limit,inf\n");
  EXPECT_EQ(formatFixed6(-0.0), "0.000000");
  EXPECT_EQ(formatFixed6(1.0 / 3), "0.333333");
}

} // namespace
} // namespace fitt
