#include <gtest/gtest.h>

#include "lgs/verdict.hpp"
#include "support.hpp"

using namespace lgs;

TEST(Verdict, Fixtures) {
  auto r = simplicity_verdict(test::fixture("six_cycle"));
  EXPECT_EQ(r.verdict, Verdict::kSimple);
  EXPECT_EQ(r.rule, 1);
  r = simplicity_verdict(test::fixture("single_loop"));
  EXPECT_EQ(r.verdict, Verdict::kNotSimple);
  EXPECT_EQ(r.rule, 3);
  r = simplicity_verdict(test::fixture("disjoint_loops"));
  EXPECT_EQ(r.verdict, Verdict::kNotSimple);
  EXPECT_EQ(r.rule, 2);
  r = simplicity_verdict(test::fixture("range_vertex"));
  EXPECT_EQ(r.verdict, Verdict::kNotApplicable);
  EXPECT_EQ(r.rule, 0);
}

TEST(Verdict, RuleTableOnRandomGraphs) {
  std::map<int, int> seen;
  for (const auto& g : test::random_graphs(24, 200)) {
    const auto r = simplicity_verdict(g);
    ASSERT_FALSE(r.citations.empty());
    ++seen[r.rule];
    const bool strong = r.strong_cofinal.holds;
    const bool dis = r.disagreeable.space_disagreeable;
    switch (r.rule) {
      case 0: ASSERT_FALSE(r.wlr_bar_e.holds); ASSERT_EQ(r.verdict, Verdict::kNotApplicable); break;
      case 1: ASSERT_TRUE(strong && dis); ASSERT_EQ(r.verdict, Verdict::kSimple); ASSERT_TRUE(r.cofinal.holds); break;
      case 2: ASSERT_FALSE(strong); ASSERT_EQ(r.verdict, Verdict::kNotSimple); break;
      case 3: ASSERT_TRUE(strong && !dis && r.singleton); ASSERT_EQ(r.verdict, Verdict::kNotSimple); break;
      case 4: ASSERT_TRUE(strong && !dis && !r.singleton); ASSERT_EQ(r.verdict, Verdict::kUnknown); break;
      default: FAIL();
    }
    if (r.rule != 0) ASSERT_TRUE(r.wlr_bar_e.holds);
  }
  for (int rule = 0; rule <= 4; ++rule) EXPECT_GT(seen[rule], 0) << "rule " << rule;
}

TEST(Verdict, Names) {
  EXPECT_EQ(verdict_name(Verdict::kSimple), "SIMPLE");
  EXPECT_EQ(verdict_name(Verdict::kNotApplicable), "NOT_APPLICABLE");
}
