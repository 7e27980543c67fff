#include <gtest/gtest.h>

#include "lgs/oracle/oracle.hpp"

using namespace lgs;

TEST(Oracle, RandomGraphsAreValid) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracle::random_graph(rng, 6, 3);
    ASSERT_TRUE(g.is_valid());
    ASSERT_LE(g.vertex_count(), 6u);
    ASSERT_LE(g.label_count(), 3u);
  }
}

TEST(Oracle, SuiteIsDeterministic) {
  oracle::SuiteConfig c;
  c.cases = 20;
  c.seed = 42;
  const auto a = oracle::run_suite(c);
  const auto b = oracle::run_suite(c);
  ASSERT_EQ(a.tallies.size(), b.tallies.size());
  for (const auto& [k, t] : a.tallies) {
    EXPECT_EQ(t.match, b.tallies.at(k).match);
    EXPECT_EQ(t.inconclusive, b.tallies.at(k).inconclusive);
  }
  EXPECT_TRUE(a.ok());
}

TEST(Oracle, LowDepthIsInconclusiveNotMismatch) {
  oracle::SuiteConfig c;
  c.cases = 60;
  c.seed = 3;
  c.depth = 1;
  const auto r = oracle::run_suite(c);
  EXPECT_TRUE(r.ok());
  std::size_t inconclusive = 0;
  for (const auto& [k, t] : r.tallies) inconclusive += t.inconclusive;
  EXPECT_GT(inconclusive, 0u);
}

TEST(Oracle, NaiveHelpers) {
  const auto g = LabelledGraph::from_edges({{"x", "y", "a"}, {"x", "z", "a"}, {"y", "x", "b"}, {"z", "z", "b"}});
  EXPECT_EQ(oracle::path_range(g, g.singleton(0), {0, 1}), make_set(g, {"x", "z"}));
  EXPECT_EQ(oracle::naive_omega(g, 1).size(), 3u);
  EXPECT_EQ(oracle::readable_words(g, g.singleton(1), 2).size(), 2u);
}
