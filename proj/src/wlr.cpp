#include "lgs/wlr.hpp"

#include <deque>
#include <unordered_map>

#include "lgs/error.hpp"

namespace lgs {
namespace {

struct Triple {
  VertexSet a, b, both;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    return t.a.hash() * 31 + t.b.hash() * 17 + t.both.hash();
  }
};

// Breadth-first search in label order: the first bad node discovered is
// reached by the shortest, then label-order least, word.
template <typename Bad>
std::optional<Word> search(const LabelledGraph& g, Triple start, Bad bad) {
  std::unordered_map<Triple, std::size_t, TripleHash> seen;
  std::vector<Triple> nodes;
  std::vector<std::pair<std::size_t, LabelId>> parent;
  seen.emplace(start, 0);
  nodes.push_back(std::move(start));
  parent.emplace_back(0, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (LabelId a = 0; a < g.label_count(); ++a) {
      Triple t{g.step(nodes[i].a, a), g.step(nodes[i].b, a), g.step(nodes[i].both, a)};
      // With one side empty every extension satisfies the identity.
      if (t.a.empty() || t.b.empty()) continue;
      if (seen.contains(t)) continue;
      const bool hit = bad(t);
      seen.emplace(t, nodes.size());
      nodes.push_back(std::move(t));
      parent.emplace_back(i, a);
      if (hit) {
        Word w;
        for (std::size_t k = nodes.size() - 1; k != 0; k = parent[k].first) w.push_back(parent[k].second);
        return Word(w.rbegin(), w.rend());
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> wlr_pair_counterexample(const LabelledGraph& g, const VertexSet& a, const VertexSet& b) {
  return search(g, {a, b, a & b}, [](const Triple& t) { return (t.a & t.b) != t.both; });
}

WlrVerdict check_wlr(const LabelledGraph& g, const SetFamily& family, const Limits& limits) {
  require_valid(g);
  WlrVerdict verdict;
  const auto sets = family.is_block_implicit() ? family.blocks() : family.members();
  const std::size_t n = sets.size();
  if (n > 1 && n * (n - 1) / 2 > limits.max_pairs) throw ResourceError("--cap-pairs", limits.max_pairs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const VertexSet& a = sets[i];
      const VertexSet& b = sets[j];
      if (!family.is_block_implicit() && (a.is_subset_of(b) || b.is_subset_of(a))) continue;
      auto w = wlr_pair_counterexample(g, a, b);
      if (w) {
        verdict.holds = false;
        verdict.counterexample = WlrCounterexample{a, b, std::move(*w)};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace lgs
