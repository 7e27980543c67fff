#include "lgs/cofinality.hpp"

namespace lgs {

VertexSet reachable_after(const LabelledGraph& g, const VertexSet& from) {
  VertexSet seen = g.empty_set();
  VertexSet frontier = from;
  while (!frontier.empty()) {
    VertexSet next = g.empty_set();
    for (LabelId a = 0; a < g.label_count(); ++a) next |= g.step(frontier, a);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

CofinalityVerdict check_cofinality(const LabelledGraph& g, CofinalityKind kind, const StablePartition& stable,
                                   const Limits& limits) {
  require_valid(g);
  const Partition sources = kind == CofinalityKind::kStrong ? omega(g, 1, limits) : stable.limit;
  const auto& targets = stable.limit.blocks;

  std::vector<VertexSet> seeds;
  for (VertexId w = 0; w < g.vertex_count(); ++w) seeds.push_back(g.singleton(w));
  seeds.insert(seeds.end(), sources.blocks.begin(), sources.blocks.end());
  seeds.insert(seeds.end(), targets.begin(), targets.end());
  const auto aut = SubsetAutomaton::build(g, seeds, limits.max_states);

  std::vector<VertexSet> covers;
  for (const auto& t : targets) covers.push_back(reach_union(aut, *aut.find(t)));

  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const VertexSet& source = sources.block_of(w);
    const StateId start = *aut.find(g.singleton(w));
    const StateId paired = *aut.find(source);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const VertexSet& cover = covers[t];
      auto x = find_bad_lasso(aut, start, paired,
                              [&](StateId, StateId s) { return !aut.state(s).is_subset_of(cover); });
      if (x) {
        x->annotation = "r(" + format_set(g, source) + ", x[1..N]) escapes U(" + format_set(g, targets[t]) +
                        ") = " + format_set(g, cover) + " for every N >= 1";
        return {false, CofinalityWitness{w, source, targets[t], std::move(*x)}};
      }
    }
  }
  return {};
}

CofinalityVerdict check_strong_cofinality(const LabelledGraph& g, const Limits& limits) {
  return check_cofinality(g, CofinalityKind::kStrong, stable_partition(g, limits), limits);
}

CofinalityVerdict check_cofinality(const LabelledGraph& g, const Limits& limits) {
  return check_cofinality(g, CofinalityKind::kPlain, stable_partition(g, limits), limits);
}

bool replay_cofinality_witness(const LabelledGraph& g, const CofinalityWitness& witness, std::size_t extra_cycles) {
  if (witness.x.cycle.empty()) return false;
  if (!witness.source.contains(witness.w)) return false;
  const VertexSet cover = reachable_after(g, witness.target_block);
  VertexSet from_w = g.singleton(witness.w);
  VertexSet from_source = witness.source;
  Word x = witness.x.prefix;
  for (std::size_t k = 0; k < extra_cycles; ++k) x.insert(x.end(), witness.x.cycle.begin(), witness.x.cycle.end());
  for (LabelId a : x) {
    from_w = g.step(from_w, a);
    from_source = g.step(from_source, a);
    if (from_w.empty()) return false;
    if (from_source.is_subset_of(cover)) return false;
  }
  return true;
}

}  // namespace lgs
