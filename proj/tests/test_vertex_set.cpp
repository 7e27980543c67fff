#include <gtest/gtest.h>

#include <random>

#include "lgs/vertex_set.hpp"

using lgs::VertexSet;

namespace {

VertexSet random_set(std::mt19937_64& rng, std::size_t universe) {
  VertexSet s(universe);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t v = 0; v < universe; ++v)
    if (coin(rng)) s.insert(static_cast<lgs::VertexId>(v));
  return s;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet a(10, {1, 3, 5});
  VertexSet b(10, {3, 4});
  EXPECT_EQ((a & b), VertexSet(10, {3}));
  EXPECT_EQ((a | b), VertexSet(10, {1, 3, 4, 5}));
  EXPECT_EQ((a - b), VertexSet(10, {1, 5}));
  EXPECT_TRUE(VertexSet(10, {3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ(a.first(), 1u);
  EXPECT_EQ(a.members(), (std::vector<lgs::VertexId>{1, 3, 5}));
  EXPECT_TRUE(VertexSet(10).empty());
  EXPECT_EQ(VertexSet::full(3).count(), 3u);
}

TEST(VertexSet, WideUniverse) {
  VertexSet a(130, {0, 64, 129});
  EXPECT_TRUE(a.contains(129));
  EXPECT_FALSE(a.contains(128));
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ(VertexSet::full(130).count(), 130u);
}

TEST(VertexSet, OrderMatchesMemberLists) {
  std::mt19937_64 rng(3);
  for (std::size_t universe : {5u, 64u, 70u, 140u}) {
    for (int i = 0; i < 2000; ++i) {
      const VertexSet a = random_set(rng, universe);
      const VertexSet b = random_set(rng, universe);
      EXPECT_EQ(a < b, a.members() < b.members());
      EXPECT_EQ(a == b, a.members() == b.members());
      if (a == b) {
        EXPECT_EQ(a.hash(), b.hash());
      }
    }
  }
}
