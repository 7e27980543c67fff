#include <gtest/gtest.h>

#include "lgs/words.hpp"

using namespace lgs;

namespace {

// Every word over `k` letters of length exactly n.
std::vector<Word> all_words(std::size_t n, LabelId k) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (LabelId a = 0; a < k; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

// w = beta w' = w' gamma with |beta| = p and w' nonempty.
bool has_border_of_shift(const Word& w, std::size_t p) {
  if (p == 0 || p >= w.size()) return false;
  const Word rest(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
  return std::equal(rest.begin(), rest.end(), w.begin());
}

Word power(const Word& u, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), u.begin(), u.end());
  return out;
}

}  // namespace

TEST(Period, Basics) {
  EXPECT_TRUE(has_period({0, 1, 0, 1}, 2));
  EXPECT_FALSE(has_period({0, 1, 0, 1}, 1));
  EXPECT_TRUE(has_period({0, 0}, 1));
  EXPECT_FALSE(has_period({0}, 1));
  EXPECT_FALSE(has_period({0, 1, 0}, 3));
  EXPECT_FALSE(is_agreeable({0}, 5));
  EXPECT_TRUE(is_agreeable({0, 1, 0}, 2));
  EXPECT_FALSE(is_agreeable({0, 1, 0}, 1));
}

TEST(Period, AgreeableMatchesBorderEnumeration) {
  for (std::size_t n = 0; n <= 9; ++n)
    for (const auto& w : all_words(n, 3))
      for (std::size_t l = 1; l <= 6; ++l) {
        bool expected = false;
        for (std::size_t p = 1; p <= l; ++p) expected = expected || has_border_of_shift(w, p);
        ASSERT_EQ(is_agreeable(w, l), expected);
      }
}

TEST(Primitive, RootsAndPowers) {
  EXPECT_EQ(primitive_root({0, 1, 0, 1}), (Word{0, 1}));
  EXPECT_EQ(primitive_root({0, 1, 0}), (Word{0, 1, 0}));
  EXPECT_TRUE(is_primitive({0, 1, 1}));
  EXPECT_FALSE(is_primitive({1, 1}));
  EXPECT_THROW(is_primitive({}), std::invalid_argument);
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : all_words(n, 2)) {
      const Word r = primitive_root(w);
      ASSERT_TRUE(is_primitive(r));
      ASSERT_EQ(power(r, w.size() / r.size()), w);
    }
}

TEST(Primitive, CommutingPowersForceEquality) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& u : all_words(m, 2)) {
        if (!is_primitive(u)) continue;
        for (const auto& w : all_words(n, 2)) {
          if (!is_primitive(w)) continue;
          if (power(u, w.size()) == power(w, u.size())) ASSERT_EQ(u, w);
        }
      }
}

TEST(Lasso, Canonical) {
  EXPECT_EQ(canonicalize({{}, {0, 0}}), (Lasso{{}, {0}}));
  EXPECT_EQ(canonicalize({{1, 0}, {1, 0}}), (Lasso{{}, {1, 0}}));
  EXPECT_EQ(canonicalize({{2, 1}, {0, 1}}), (Lasso{{2}, {1, 0}}));
  EXPECT_THROW(canonicalize({{0}, {}}), std::invalid_argument);
}

TEST(Lasso, CanonicalFormIsUnique) {
  // Same infinite word <=> same canonical lasso, checked on a long window.
  std::vector<Lasso> all;
  for (std::size_t pu = 0; pu <= 3; ++pu)
    for (std::size_t pc = 1; pc <= 3; ++pc)
      for (const auto& u : all_words(pu, 2))
        for (const auto& c : all_words(pc, 2)) all.push_back({u, c});
  for (const auto& x : all)
    for (const auto& y : all) {
      bool same = true;
      for (std::size_t i = 0; i < 30 && same; ++i) same = lasso_letter(x, i) == lasso_letter(y, i);
      ASSERT_EQ(same, canonicalize(x) == canonicalize(y));
    }
}

TEST(Lasso, LeastPurePeriod) {
  EXPECT_EQ(lasso_least_pure_period({{}, {0}}, 3), 1u);
  EXPECT_EQ(lasso_least_pure_period({{}, {0, 1}}, 3), 2u);
  EXPECT_EQ(lasso_least_pure_period({{}, {0, 1}}, 1), std::nullopt);
  EXPECT_EQ(lasso_least_pure_period({{1}, {0}}, 5), std::nullopt);
  EXPECT_EQ(lasso_least_pure_period({{0, 1}, {0, 1}}, 4), 2u);
}
