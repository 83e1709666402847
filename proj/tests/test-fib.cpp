#include "fitt/fib.hpp"

#include <gtest/gtest.h>

namespace fitt {
namespace {

TEST(Fib, LongerPrefixWins)
{
  Fib fib;
  fib.addNextHop(Name::parse("/univ1"), 1);
  fib.addNextHop(Name::parse("/univ1/cs"), 2);
  EXPECT_EQ(fib.lookup(Name::parse("/univ1/cs/alice/x")), std::vector<FaceId>{2});
  EXPECT_EQ(fib.lookup(Name::parse("/univ1/ee/x")), std::vector<FaceId>{1});
}

TEST(Fib, NoMatchIsEmpty)
{
  Fib fib;
  fib.addNextHop(Name::parse("/univ1"), 1);
  EXPECT_TRUE(fib.lookup(Name::parse("/isp0/x")).empty());
  EXPECT_EQ(fib.findLongestPrefixMatch(Name::parse("/isp0/x")), nullptr);
}

TEST(Fib, RootEntryIsDefaultRoute)
{
  Fib fib;
  fib.addNextHop(Name::parse("/"), 0);
  fib.addNextHop(Name::parse("/univ1"), 1);
  EXPECT_EQ(fib.lookup(Name::parse("/univ1")), std::vector<FaceId>{1});
  EXPECT_EQ(fib.lookup(Name::parse("/isp0")), std::vector<FaceId>{0});
}

TEST(Fib, NextHopsAreDeduplicatedInOrder)
{
  Fib fib;
  auto p = Name::parse("/p");
  fib.addNextHop(p, 3);
  fib.addNextHop(p, 1);
  fib.addNextHop(p, 3);
  EXPECT_EQ(fib.lookup(p), (std::vector<FaceId>{3, 1}));
  EXPECT_EQ(fib.size(), 1u);
}

TEST(Fib, InteriorTrieNodesAreNotEntries)
{
  Fib fib;
  fib.addNextHop(Name::parse("/a/b/c"), 4);
  EXPECT_EQ(fib.findExactMatch(Name::parse("/a/b")), nullptr);
  EXPECT_TRUE(fib.lookup(Name::parse("/a/b/x")).empty());
  EXPECT_EQ(fib.lookup(Name::parse("/a/b/c/d")), std::vector<FaceId>{4});
}

TEST(Fib, Erase)
{
  Fib fib;
  fib.addNextHop(Name::parse("/a"), 1);
  fib.addNextHop(Name::parse("/a/b"), 2);
  EXPECT_TRUE(fib.erase(Name::parse("/a/b")));
  EXPECT_FALSE(fib.erase(Name::parse("/a/b")));
  EXPECT_EQ(fib.lookup(Name::parse("/a/b/c")), std::vector<FaceId>{1});
  EXPECT_EQ(fib.size(), 1u);
  EXPECT_EQ(fib.entries().size(), 1u);
}

TEST(Fib, RouteCoveringChecksEveryAncestor)
{
  Fib fib;
  fib.addNextHop(Name::parse("/univ1"), 2);
  fib.addNextHop(Name::parse("/univ1/service/email"), 7);
  // the shorter route still covers the longer name on face 2
  EXPECT_TRUE(fib.hasRouteCovering(Name::parse("/univ1/service/email"), 2));
  EXPECT_TRUE(fib.hasRouteCovering(Name::parse("/univ1/service/email"), 7));
  EXPECT_FALSE(fib.hasRouteCovering(Name::parse("/univ1"), 7));
  EXPECT_FALSE(fib.hasRouteCovering(Name::parse("/isp0/service"), 2));
}

} // namespace
} // namespace fitt
