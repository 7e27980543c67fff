#pragma once

#include <optional>

#include "lgs/accommodating.hpp"
#include "lgs/automaton.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"

namespace lgs {

enum class CofinalityKind { kStrong, kPlain };

// An infinite labelled path x = prefix.cycle^inf starting at w such that for
// every N >= 1 the range r(source, x[1..N]) is not covered by U(target_block),
// where source is [w]_1 (strong) or [w]_{l*} (plain).
struct CofinalityWitness {
  VertexId w = 0;
  VertexSet source;
  VertexSet target_block;
  LassoWitness x;
};

struct CofinalityVerdict {
  bool holds = true;
  std::optional<CofinalityWitness> witness;
};

// Strong cofinality. The cover by finitely many r([v]_l, λ_i) is replaced by
// the full union U([v]_l) = ∪_{|λ|>=1} r([v]_l, λ), which is a finite union on
// a finite graph. Targets range over Omega_infinity only: [v]_l' ⊆ [v]_l for
// l <= l' gives U([v]_l') ⊆ U([v]_l), so the limit block is the hardest
// target for each v.
CofinalityVerdict check_strong_cofinality(const LabelledGraph& g, const Limits& limits = {});

// Cofinality, i.e. l-cofinality for every l >= 1. The best source set in the
// definition is the smallest, [w]_d for d >= l*, and the hardest target is
// again the limit block.
CofinalityVerdict check_cofinality(const LabelledGraph& g, const Limits& limits = {});

CofinalityVerdict check_cofinality(const LabelledGraph& g, CofinalityKind kind, const StablePartition& stable,
                                   const Limits& limits = {});

// Re-verifies a witness by direct relative-range computation for
// N = 1 .. |prefix| + extra_cycles * |cycle|: x stays realizable from w and
// r(source, x[1..N]) is never inside the graph-reachable set of the target.
bool replay_cofinality_witness(const LabelledGraph& g, const CofinalityWitness& witness,
                               std::size_t extra_cycles = 3);

// Vertices at the end of some path of length >= 1 starting in `from`.
VertexSet reachable_after(const LabelledGraph& g, const VertexSet& from);

}  // namespace lgs
