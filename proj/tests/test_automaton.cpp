#include <gtest/gtest.h>

#include "lgs/automaton.hpp"
#include "lgs/error.hpp"
#include "support.hpp"

using namespace lgs;

namespace {

SubsetAutomaton from_all(const LabelledGraph& g, std::size_t cap = Limits{}.max_states) {
  const VertexSet all = g.all_vertices();
  return SubsetAutomaton::build(g, std::span(&all, 1), cap);
}

SubsetAutomaton from_set(const LabelledGraph& g, const VertexSet& s) { return SubsetAutomaton::build(g, std::span(&s, 1)); }

}  // namespace

TEST(Automaton, StatesAreRanges) {
  const auto g = test::fixture("six_cycle");
  const auto aut = from_all(g);
  for (StateId s = 0; s < aut.state_count(); ++s) {
    EXPECT_FALSE(aut.state(s).empty());
    EXPECT_GE(aut.out_degree(s), 1u);
    for (LabelId a = 0; a < g.label_count(); ++a) {
      const VertexSet r = g.step(aut.state(s), a);
      if (r.empty())
        EXPECT_EQ(aut.next(s, a), kNoState);
      else
        EXPECT_EQ(aut.state(aut.next(s, a)), r);
    }
  }
  const StateId s = aut.run(aut.seeds().front(), parse_word(g, "a1.a3"));
  EXPECT_EQ(aut.state(s), make_set(g, {"v4", "v5"}));
  EXPECT_EQ(aut.run(aut.seeds().front(), parse_word(g, "a1.a4")), kNoState);
}

TEST(Automaton, Caps) {
  const auto g = test::fixture("six_cycle");
  EXPECT_THROW(from_all(g, 2), ResourceError);
  try {
    from_all(g, 2);
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.flag(), "--cap-states");
  }
  EXPECT_THROW(SubsetAutomaton::build(g, {}), std::invalid_argument);
}

TEST(Automaton, Dot) {
  const auto g = test::fixture("single_loop");
  const auto dot = from_all(g).to_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("s0 -> s0 [label=\"a\"]"), std::string::npos);
}

TEST(ReachUnion, IsGraphReachability) {
  for (const auto& g : test::random_graphs(21, 60)) {
    const auto aut = from_all(g);
    for (StateId s = 0; s < aut.state_count(); ++s)
      ASSERT_EQ(reach_union(aut, s), oracle::naive_reachable_after(g, aut.state(s)));
  }
}

TEST(Classify, Examples) {
  const auto loop = test::fixture("single_loop");
  auto r = classify_infinite_labels(from_all(loop), 0);
  EXPECT_FALSE(r.infinite);
  EXPECT_EQ(r.lassos, (std::vector<Lasso>{{{}, {0}}}));

  const auto alt = test::alternating_cycle();
  const auto aut = from_set(alt, alt.singleton(0));
  r = classify_infinite_labels(aut, aut.seeds().front());
  EXPECT_FALSE(r.infinite);
  EXPECT_EQ(r.lassos, (std::vector<Lasso>{{{}, {0, 1}}}));

  const auto six = test::fixture("six_cycle");
  const auto aut6 = from_set(six, make_set(six, {"v1"}));
  EXPECT_TRUE(classify_infinite_labels(aut6, aut6.seeds().front()).infinite);
}

TEST(Classify, LassosAreRealizableAndComplete) {
  // Finite case: every readable word of length k is a prefix of a listed lasso.
  for (const auto& g : test::random_graphs(8, 120)) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto aut = from_set(g, g.singleton(v));
      const auto r = classify_infinite_labels(aut, aut.seeds().front());
      if (r.infinite) continue;
      ASSERT_FALSE(r.lassos.empty());
      for (const auto& w : oracle::readable_words(g, g.singleton(v), 8)) {
        bool covered = false;
        for (const auto& x : r.lassos) {
          bool prefix = true;
          for (std::size_t i = 0; i < w.size() && prefix; ++i) prefix = lasso_letter(x, i) == w[i];
          covered = covered || prefix;
        }
        ASSERT_TRUE(covered) << serialize(g);
      }
      for (const auto& x : r.lassos) {
        ASSERT_EQ(canonicalize(x), x);
        Word w;
        for (std::size_t i = 0; i < 12; ++i) w.push_back(lasso_letter(x, i));
        ASSERT_FALSE(relative_range(g, g.singleton(v), w).empty());
      }
    }
  }
}

TEST(BadLasso, DisjointLoops) {
  const auto g = test::fixture("disjoint_loops");
  const VertexSet w = make_set(g, {"w"});
  const VertexSet v = make_set(g, {"v"});
  const VertexSet seeds[] = {w, v};
  const auto aut = SubsetAutomaton::build(g, seeds);
  const VertexSet cover = reach_union(aut, *aut.find(v));
  const auto x = find_bad_lasso(aut, *aut.find(w), *aut.find(w),
                                [&](StateId, StateId s) { return !aut.state(s).is_subset_of(cover); });
  ASSERT_TRUE(x);
  EXPECT_TRUE(x->prefix.empty());
  EXPECT_EQ(x->cycle, parse_word(g, "a"));
  EXPECT_FALSE(find_bad_lasso(aut, *aut.find(v), *aut.find(v), [&](StateId, StateId s) {
    return !aut.state(s).is_subset_of(cover);
  }));
}

TEST(BadLasso, MinimalAgainstEnumeration) {
  // The returned lasso has the least |prefix|+|cycle| among all bad lassos up
  // to length 6, and is least in label order among those.
  for (const auto& g : test::random_graphs(31, 80, 5)) {
    const auto aut = from_all(g);
    for (StateId target = 0; target < aut.state_count(); target += 3) {
      const VertexSet& avoid = aut.state(target);
      auto bad = [&](StateId p, StateId) { return !aut.state(p).is_subset_of(avoid); };
      const auto found = find_bad_lasso(aut, aut.seeds().front(), aut.seeds().front(), bad);
      std::optional<Word> best;
      std::size_t best_split = 0;
      auto words = oracle::readable_words(g, g.all_vertices(), 6);
      std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      for (const auto& x : words) {
        if (best) break;
        for (std::size_t j = 0; j < x.size(); ++j) {
          // Every product state after step 1 must be bad; the cycle must
          // return to the state reached after the prefix.
          StateId s = aut.seeds().front();
          std::vector<StateId> trace;
          bool ok = true;
          for (LabelId a : x) {
            s = aut.next(s, a);
            if (s == kNoState || !bad(s, s)) {
              ok = false;
              break;
            }
            trace.push_back(s);
          }
          const StateId at_split = j == 0 ? aut.seeds().front() : trace.empty() ? kNoState : trace[j - 1];
          if (!ok || trace.back() != at_split) continue;
          best = x;
          best_split = j;
          break;
        }
      }
      if (!best) {
        if (found) ASSERT_GT(found->prefix.size() + found->cycle.size(), 6u);
        continue;
      }
      ASSERT_TRUE(found);
      Word got = found->prefix;
      got.insert(got.end(), found->cycle.begin(), found->cycle.end());
      ASSERT_EQ(got, *best) << serialize(g);
      ASSERT_EQ(found->prefix.size(), best_split);
    }
  }
}
