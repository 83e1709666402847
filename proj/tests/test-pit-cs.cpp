#include "fitt/content-store.hpp"
#include "fitt/pit.hpp"

#include <gtest/gtest.h>

namespace fitt {
namespace {

TEST(Pit, InsertFindErase)
{
  Pit pit;
  auto [entry, isNew] = pit.insert(Name::parse("/p/a"));
  EXPECT_TRUE(isNew);
  entry->inFaces[1] = 11;
  auto [again, isNew2] = pit.insert(Name::parse("/p/a"));
  EXPECT_FALSE(isNew2);
  EXPECT_EQ(again, entry);
  EXPECT_TRUE(pit.find(Name::parse("/p/a"))->hasInFace(1));
  pit.erase(Name::parse("/p/a"));
  EXPECT_EQ(pit.find(Name::parse("/p/a")), nullptr);
  EXPECT_EQ(pit.size(), 0u);
}

TEST(Pit, ForEachUnderVisitsOnlyTheSubtree)
{
  Pit pit;
  for (const char* uri : {"/p", "/p/a", "/p/a/b", "/pa", "/q/a", "/p/z"}) {
    pit.insert(Name::parse(uri));
  }
  std::vector<std::string> seen;
  pit.forEachUnder(Name::parse("/p"), [&] (const PitEntry& e) { seen.push_back(e.name.toUri()); });
  EXPECT_EQ(seen, (std::vector<std::string>{"/p", "/p/a", "/p/a/b", "/p/z"}));
}

Data
makeData(const char* uri, Time freshness)
{
  return Data{Name::parse(uri), freshness, 100};
}

TEST(ContentStore, FreshDataIsReturned)
{
  ContentStore cs(4);
  cs.insert(makeData("/p/1", seconds(4)), seconds(1));
  ASSERT_TRUE(cs.find(Name::parse("/p/1"), seconds(4.9)));
  EXPECT_FALSE(cs.find(Name::parse("/p/1"), seconds(5)));
  EXPECT_FALSE(cs.find(Name::parse("/p/2"), seconds(1)));
}

TEST(ContentStore, ZeroFreshnessIsNotStored)
{
  ContentStore cs(4);
  cs.insert(makeData("/p/d", Time{0}), Time{0});
  EXPECT_EQ(cs.size(), 0u);
  EXPECT_FALSE(cs.find(Name::parse("/p/d"), Time{0}));
}

TEST(ContentStore, LeastRecentlyUsedIsEvicted)
{
  ContentStore cs(2);
  cs.insert(makeData("/p/1", seconds(10)), Time{0});
  cs.insert(makeData("/p/2", seconds(10)), Time{0});
  ASSERT_TRUE(cs.find(Name::parse("/p/1"), seconds(1))); // /p/2 becomes LRU
  cs.insert(makeData("/p/3", seconds(10)), seconds(1));
  EXPECT_EQ(cs.size(), 2u);
  EXPECT_TRUE(cs.find(Name::parse("/p/1"), seconds(2)));
  EXPECT_FALSE(cs.find(Name::parse("/p/2"), seconds(2)));
  EXPECT_TRUE(cs.find(Name::parse("/p/3"), seconds(2)));
}

TEST(ContentStore, ZeroCapacityStoresNothing)
{
  ContentStore cs(0);
  cs.insert(makeData("/p/1", seconds(10)), Time{0});
  EXPECT_EQ(cs.size(), 0u);
}

} // namespace
} // namespace fitt
