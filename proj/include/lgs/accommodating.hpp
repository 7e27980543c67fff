#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "lgs/graph.hpp"
#include "lgs/limits.hpp"

namespace lgs {

// A disjoint cover of the vertex set. Blocks are ordered by their smallest
// vertex.
struct Partition {
  std::size_t level = 0;  // 0 for the stable limit
  std::vector<VertexSet> blocks;

  const VertexSet& block_of(VertexId v) const;
  bool is_discrete() const;
  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
};

// Omega_l: v ~ w iff both receive exactly the same labelled paths of length
// 1..l. Computed by refining E^0 with every range r(a) of a word of length
// <= l, since w lies in r(a) exactly when a labels a path ending at w.
Partition omega(const LabelledGraph& g, std::size_t level, const Limits& limits = {});

struct StablePartition {
  Partition limit;           // Omega_infinity
  std::size_t level = 1;     // least l with Omega_l == Omega_infinity
};

// Omega_infinity is the kernel of in-language equivalence. It is decided by
// determinizing the label automaton from E^0 (every state is some r(a)) and
// refining by all of its states; this does not rely on consecutive levels
// agreeing, which can happen before the limit is reached.
StablePartition stable_partition(const LabelledGraph& g, const Limits& limits = {});

// [v]_l.
VertexSet generalized_vertex(const LabelledGraph& g, VertexId v, std::size_t level,
                             const Limits& limits = {});

struct XlYl {
  VertexSet x;         // intersection of r(a) over in-words a of v up to level
  std::set<Word> y;    // in-words of members of x that v does not receive
};

// Throws UndefinedError when v receives no path of length <= level.
XlYl xl_yl(const LabelledGraph& g, VertexId v, std::size_t level);

// Union of r(a) over a set of words.
VertexSet range_of_words(const LabelledGraph& g, const std::set<Word>& words);

// A family of vertex sets, either listed explicitly or given as all unions of
// disjoint blocks. The empty set counts as a member of every family and is
// never listed.
class SetFamily {
 public:
  static SetFamily explicit_family(std::vector<VertexSet> members);
  static SetFamily block_family(std::vector<VertexSet> blocks);

  bool is_block_implicit() const { return block_implicit_; }
  // Explicit families only: members in canonical order.
  std::span<const VertexSet> members() const { return sets_; }
  // Block families only.
  std::span<const VertexSet> blocks() const { return sets_; }
  bool contains(const VertexSet& s) const;
  // Number of nonempty members (2^blocks - 1 for block families, saturating).
  std::size_t size() const;

  // Every nonempty member, materialized. Throws ResourceError past max_family.
  std::vector<VertexSet> materialize(std::size_t max_family) const;

 private:
  bool block_implicit_ = false;
  std::vector<VertexSet> sets_;
  std::unordered_set<VertexSet, VertexSetHash> lookup_;
};

// E^{0,-}: the least family holding every r(a) and closed under relative
// ranges, finite intersections and finite unions.
SetFamily smallest_accommodating(const LabelledGraph& g, const Limits& limits = {});

// Closure check over single letters, pairwise intersections and unions.
bool is_accommodating(const LabelledGraph& g, const SetFamily& family);

// All finite unions of generalized vertices, as unions of Omega_infinity
// blocks (each [v]_l is such a union because the levels refine).
SetFamily bar_e(const LabelledGraph& g, const Limits& limits = {});
SetFamily bar_e(const StablePartition& stable);

// {v} is a finite union of generalized vertices for every v.
bool singleton_condition(const LabelledGraph& g, const Limits& limits = {});

}  // namespace lgs
