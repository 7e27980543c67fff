#include "lgs/disagreeable.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "lgs/automaton.hpp"

namespace lgs {

BlockEvidence block_evidence(const LabelledGraph& g, const VertexSet& s, const Limits& limits) {
  require_valid(g);
  const auto aut = SubsetAutomaton::build(g, std::span(&s, 1), limits.max_states);
  const auto labels = classify_infinite_labels(aut, aut.seeds().front());
  BlockEvidence ev;
  if (labels.infinite) return ev;
  ev.lassos = labels.lassos;
  ev.kind = BlockEvidence::Kind::kPeriodic;
  for (const auto& x : ev.lassos) {
    // Canonical lassos are purely periodic iff the prefix is empty, with the
    // primitive cycle length as least period.
    if (!x.prefix.empty()) {
      ev.kind = BlockEvidence::Kind::kNonPeriodic;
      ev.lasso = x;
      ev.period_bound = 0;
      return ev;
    }
    ev.period_bound = std::max(ev.period_bound, x.cycle.size());
  }
  return ev;
}

std::optional<Word> non_agreeable_word(const LabelledGraph& g, const VertexSet& s, std::size_t level,
                                       std::size_t max_states) {
  if (level == 0 || s.empty()) return std::nullopt;
  // State: (current range, last min(level, n) letters, violated periods).
  struct Node {
    VertexSet at;
    Word window;
    std::uint64_t mask;
    std::size_t parent;
    LabelId letter;
  };
  const std::uint64_t full = level >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << level) - 1;
  if (level > 64) return std::nullopt;
  std::map<std::tuple<std::vector<VertexId>, Word, std::uint64_t>, bool> seen;
  std::vector<Node> nodes{{s, {}, 0, 0, 0}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (LabelId a = 0; a < g.label_count(); ++a) {
      VertexSet at = g.step(nodes[i].at, a);
      if (at.empty()) continue;
      const Word& win = nodes[i].window;
      std::uint64_t mask = nodes[i].mask;
      // The new letter sits p positions after win[size - p].
      for (std::size_t p = 1; p <= win.size(); ++p)
        if (win[win.size() - p] != a) mask |= std::uint64_t{1} << (p - 1);
      Word window = win;
      window.push_back(a);
      if (window.size() > level) window.erase(window.begin());
      if (!seen.emplace(std::make_tuple(at.members(), window, mask), true).second) continue;
      if (nodes.size() >= max_states) return std::nullopt;
      nodes.push_back({std::move(at), std::move(window), mask, i, a});
      if (mask == full) {
        Word w;
        for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) w.push_back(nodes[k].letter);
        return Word(w.rbegin(), w.rend());
      }
    }
  }
  return std::nullopt;
}

BlockDecision disagreeable_block(const LabelledGraph& g, const VertexSet& s, std::size_t level,
                                 const Limits& limits) {
  BlockDecision d;
  d.evidence = block_evidence(g, s, limits);
  switch (d.evidence.kind) {
    case BlockEvidence::Kind::kInfinite:
    case BlockEvidence::Kind::kNonPeriodic:
      d.disagreeable = true;
      break;
    case BlockEvidence::Kind::kPeriodic:
      d.disagreeable = std::any_of(d.evidence.lassos.begin(), d.evidence.lassos.end(),
                                   [&](const Lasso& x) { return !lasso_least_pure_period(x, level); });
      break;
  }
  if (d.disagreeable) d.witness = non_agreeable_word(g, s, level, limits.max_states);
  return d;
}

DisagreeableVerdict disagreeable_space(const LabelledGraph& g, const StablePartition& stable, const Limits& limits) {
  DisagreeableVerdict verdict;
  std::vector<Partition> levels;
  for (std::size_t l = 1; l <= stable.level; ++l) levels.push_back(omega(g, l, limits));

  std::map<VertexSet, BlockEvidence> cache;
  auto evidence_for = [&](const VertexSet& s) -> const BlockEvidence& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, block_evidence(g, s, limits)).first;
    return it->second;
  };
  auto fails_at = [](const BlockEvidence& ev, std::size_t l) {
    return ev.kind == BlockEvidence::Kind::kPeriodic && ev.period_bound <= l;
  };

  for (VertexId v = 0; v < g.vertex_count() && !verdict.failure; ++v) {
    for (std::size_t l = 1; l <= stable.level; ++l) {
      if (fails_at(evidence_for(levels[l - 1].block_of(v)), l)) {
        verdict.failure = std::make_pair(v, l);
        break;
      }
    }
    if (verdict.failure) break;
    const BlockEvidence& tail = evidence_for(stable.limit.block_of(v));
    if (tail.kind == BlockEvidence::Kind::kPeriodic)
      verdict.failure = std::make_pair(v, std::max(stable.level + 1, tail.period_bound));
  }
  verdict.space_disagreeable = !verdict.failure.has_value();
  for (auto& [s, ev] : cache) verdict.evidence.emplace_back(s, ev);
  return verdict;
}

DisagreeableVerdict disagreeable_space(const LabelledGraph& g, const Limits& limits) {
  return disagreeable_space(g, stable_partition(g, limits), limits);
}

}  // namespace lgs
