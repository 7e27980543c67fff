#pragma once

#include <optional>

#include "lgs/accommodating.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"

namespace lgs {

// r(a ∩ b, word) != r(a, word) ∩ r(b, word).
struct WlrCounterexample {
  VertexSet a;
  VertexSet b;
  Word word;
};

struct WlrVerdict {
  bool holds = true;
  std::optional<WlrCounterexample> counterexample;
};

// Shortest (then label-order least) word breaking the identity for one pair,
// found by breadth-first search over (r(a,w), r(b,w), r(a∩b,w)).
std::optional<Word> wlr_pair_counterexample(const LabelledGraph& g, const VertexSet& a, const VertexSet& b);

// Weak left-resolving for every pair of family members and every word.
//
// Explicit families: each unordered pair where neither contains the other is
// searched (nested pairs satisfy the identity trivially). Pairs are visited in
// canonical order and the first failing pair is reported.
//
// Block families (all unions of disjoint blocks): the identity holds for all
// unions iff r(b1, w) and r(b2, w) are disjoint for every pair of distinct
// blocks and every w. If A = ∪ b_i and B = ∪ c_j then
// r(A,w) ∩ r(B,w) = ∪_{i,j} r(b_i,w) ∩ r(c_j,w); terms with b_i != c_j vanish
// under the block criterion and the rest give r(A∩B, w), since A∩B is the
// union of the shared blocks. Conversely two distinct blocks have empty
// intersection, so the identity for that pair is exactly disjointness.
WlrVerdict check_wlr(const LabelledGraph& g, const SetFamily& family, const Limits& limits = {});

}  // namespace lgs
