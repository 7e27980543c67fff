#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgs/graph.hpp"
#include "lgs/limits.hpp"
#include "lgs/words.hpp"

namespace lgs {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// Deterministic transition system on nonempty vertex sets: S --a--> r(S, a),
// present iff r(S, a) is nonempty. Every state is reachable from a seed.
//
// Because empty sets are pruned and the graph has no sinks, every state has at
// least one outgoing transition, so a word is a prefix of some infinite
// labelled path from S exactly when it can be replayed from S (finite
// branching plus Koenig's lemma).
class SubsetAutomaton {
 public:
  // Breadth-first closure of `seeds` under single-letter relative ranges.
  // Throws ResourceError when more than `max_states` states would be needed.
  static SubsetAutomaton build(const LabelledGraph& g, std::span<const VertexSet> seeds,
                               std::size_t max_states = Limits{}.max_states);

  std::size_t state_count() const { return states_.size(); }
  std::size_t label_count() const { return label_count_; }
  const VertexSet& state(StateId s) const { return states_[s]; }
  StateId next(StateId s, LabelId a) const { return trans_[static_cast<std::size_t>(s) * label_count_ + a]; }
  const std::vector<StateId>& seeds() const { return seeds_; }
  std::optional<StateId> find(const VertexSet& s) const;

  // State reached by replaying w from s, or kNoState if the word dies.
  StateId run(StateId s, const Word& w) const;

  std::size_t out_degree(StateId s) const;

  std::string to_dot(const LabelledGraph& g) const;

 private:
  std::size_t label_count_ = 0;
  std::vector<VertexSet> states_;
  std::vector<StateId> trans_;
  std::vector<StateId> seeds_;
  std::unordered_map<VertexSet, StateId, VertexSetHash> index_;
};

// U(S): union of all states reachable from s in one or more transitions.
VertexSet reach_union(const SubsetAutomaton& aut, StateId s);

// The infinite label sequences readable from a state: either infinitely many,
// or a finite complete list of canonical lassos (sorted, deduplicated).
struct InfiniteLabels {
  bool infinite = false;
  std::vector<Lasso> lassos;  // empty when infinite
};

// Infinite iff some branching state (two or more outgoing labels) is reachable
// from a state that lies on a cycle reachable from s.
InfiniteLabels classify_infinite_labels(const SubsetAutomaton& aut, StateId s);

struct LassoWitness {
  Word prefix;
  Word cycle;
  std::string annotation;
};

// Product states (primary, paired) advance together on the same letter; a
// transition exists when both components have one. Returns a lasso whose
// product states at steps 1, 2, ... all satisfy `bad` (the start is exempt).
// Among all such lassos the one with the least |prefix|+|cycle| is returned,
// ties broken by the label order of prefix.cycle.
std::optional<LassoWitness> find_bad_lasso(const SubsetAutomaton& aut, StateId start, StateId paired,
                                           const std::function<bool(StateId, StateId)>& bad);

}  // namespace lgs
