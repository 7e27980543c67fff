#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lgs/accommodating.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"
#include "lgs/words.hpp"

namespace lgs {

// What the infinite label sequences from a set look like.
struct BlockEvidence {
  enum class Kind {
    kInfinite,     // infinitely many sequences
    kPeriodic,     // finitely many, all of the form b^inf; period_bound = max least period
    kNonPeriodic,  // finitely many, `lasso` is not of the form b^inf
  };
  Kind kind = Kind::kInfinite;
  std::size_t period_bound = 0;
  Lasso lasso;
  std::vector<Lasso> lassos;  // complete list when finite
};

struct BlockDecision {
  bool disagreeable = false;
  // Word readable from the set with no period <= level (length >= level+1).
  // Present whenever the set is disagreeable unless the search cap was hit.
  std::optional<Word> witness;
  BlockEvidence evidence;
};

BlockEvidence block_evidence(const LabelledGraph& g, const VertexSet& s, const Limits& limits = {});

// Decision by the dichotomy on X_S, the infinite label sequences readable
// from S. If X_S is infinite, S is disagreeable at every level: a
// non-disagreeable set only admits sequences b^inf with |b| <= level, of
// which there are finitely many. If X_S is finite, long words from S are
// prefixes of its lassos, so S is disagreeable at `level` iff some lasso has
// no pure period <= level.
BlockDecision disagreeable_block(const LabelledGraph& g, const VertexSet& s, std::size_t level,
                                 const Limits& limits = {});

// Shortest (then label-order least) word from `s` violating every period
// 1..level; nullopt if none exists or the search exceeds max_states.
std::optional<Word> non_agreeable_word(const LabelledGraph& g, const VertexSet& s, std::size_t level,
                                       std::size_t max_states);

struct DisagreeableVerdict {
  bool space_disagreeable = true;
  std::optional<std::pair<VertexId, std::size_t>> failure;  // (v, least failing l)
  std::vector<std::pair<VertexSet, BlockEvidence>> evidence;
};

// Every [v]_l for every v and every l >= 1. Levels 1..l* are checked
// directly; above l* the set is constantly [v]_{l*}, so the tail holds iff its
// sequences are infinite or include one that is not purely periodic. A tail
// failure is reported at max(l*+1, largest least period).
DisagreeableVerdict disagreeable_space(const LabelledGraph& g, const Limits& limits = {});
DisagreeableVerdict disagreeable_space(const LabelledGraph& g, const StablePartition& stable,
                                       const Limits& limits = {});

}  // namespace lgs
