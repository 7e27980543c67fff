#include "lgs/accommodating.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "lgs/automaton.hpp"
#include "lgs/error.hpp"

namespace lgs {
namespace {

// Class labels per vertex, renumbered so class ids follow smallest members.
class Refiner {
 public:
  explicit Refiner(std::size_t n) : cls_(n, 0), classes_(n == 0 ? 0 : 1) {}

  void refine(const VertexSet& s) {
    std::unordered_map<std::uint64_t, std::uint32_t> fresh;
    for (std::size_t v = 0; v < cls_.size(); ++v) {
      const std::uint64_t key = (static_cast<std::uint64_t>(cls_[v]) << 1) | (s.contains(static_cast<VertexId>(v)) ? 1u : 0u);
      auto [it, _] = fresh.emplace(key, static_cast<std::uint32_t>(fresh.size()));
      cls_[v] = it->second;
    }
    classes_ = fresh.size();
  }

  std::size_t classes() const { return classes_; }

  Partition partition(std::size_t level) const {
    Partition p;
    p.level = level;
    p.blocks.assign(classes_, VertexSet(cls_.size()));
    for (std::size_t v = 0; v < cls_.size(); ++v) p.blocks[cls_[v]].insert(static_cast<VertexId>(v));
    return p;
  }

 private:
  std::vector<std::uint32_t> cls_;
  std::size_t classes_;
};

}  // namespace

const VertexSet& Partition::block_of(VertexId v) const {
  for (const auto& b : blocks)
    if (b.contains(v)) return b;
  throw std::out_of_range("vertex not covered by partition");
}

bool Partition::is_discrete() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const VertexSet& b) { return b.count() == 1; });
}

bool Partition::refines(const Partition& coarser) const {
  return std::all_of(blocks.begin(), blocks.end(), [&](const VertexSet& b) {
    return b.empty() || b.is_subset_of(coarser.block_of(b.first()));
  });
}

Partition omega(const LabelledGraph& g, std::size_t level, const Limits& limits) {
  require_valid(g);
  if (level == 0) throw std::invalid_argument("omega: level must be >= 1");
  Refiner refiner(g.vertex_count());
  std::vector<VertexSet> layer{g.all_vertices()};
  for (std::size_t k = 1; k <= level && !layer.empty(); ++k) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> next;
    for (const auto& s : layer) {
      for (LabelId a = 0; a < g.label_count(); ++a) {
        VertexSet t = g.step(s, a);
        if (t.empty() || !seen.insert(t).second) continue;
        if (next.size() >= limits.max_states) throw ResourceError("--cap-states", limits.max_states);
        refiner.refine(t);
        next.push_back(std::move(t));
      }
    }
    layer = std::move(next);
  }
  return refiner.partition(level);
}

StablePartition stable_partition(const LabelledGraph& g, const Limits& limits) {
  require_valid(g);
  const VertexSet all = g.all_vertices();
  const auto aut = SubsetAutomaton::build(g, std::span(&all, 1), limits.max_states);

  Refiner limit(g.vertex_count());
  for (StateId s = 0; s < aut.state_count(); ++s) limit.refine(aut.state(s));

  StablePartition out;
  out.limit = limit.partition(0);
  Refiner levels(g.vertex_count());
  std::vector<char> in_layer(aut.state_count(), 0);
  std::vector<StateId> layer{aut.seeds().front()};
  for (std::size_t k = 1;; ++k) {
    std::fill(in_layer.begin(), in_layer.end(), 0);
    std::vector<StateId> next;
    for (StateId s : layer)
      for (LabelId a = 0; a < aut.label_count(); ++a) {
        const StateId t = aut.next(s, a);
        if (t != kNoState && !in_layer[t]) {
          in_layer[t] = 1;
          next.push_back(t);
          levels.refine(aut.state(t));
        }
      }
    layer = std::move(next);
    // Level partitions are coarser than the limit, so equal class counts
    // mean equal partitions.
    if (levels.classes() == limit.classes() || layer.empty()) {
      out.level = k;
      break;
    }
  }
  return out;
}

VertexSet generalized_vertex(const LabelledGraph& g, VertexId v, std::size_t level, const Limits& limits) {
  return omega(g, level, limits).block_of(v);
}

VertexSet range_of_words(const LabelledGraph& g, const std::set<Word>& words) {
  VertexSet out = g.empty_set();
  for (const auto& w : words) out |= range_of_word(g, w);
  return out;
}

XlYl xl_yl(const LabelledGraph& g, VertexId v, std::size_t level) {
  const auto own = in_label_words(g, v, level);
  if (own.empty())
    throw UndefinedError("vertex '" + g.vertex_name(v) + "' receives no path of length <= " +
                         std::to_string(level) + "; use its generalized vertex directly");
  XlYl out{g.all_vertices(), {}};
  for (const auto& w : own) out.x &= range_of_word(g, w);
  out.x.for_each([&](VertexId u) {
    for (auto& w : in_label_words(g, u, level))
      if (!own.contains(w)) out.y.insert(w);
  });
  return out;
}

SetFamily SetFamily::explicit_family(std::vector<VertexSet> members) {
  SetFamily f;
  std::erase_if(members, [](const VertexSet& s) { return s.empty(); });
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.sets_ = std::move(members);
  f.lookup_.insert(f.sets_.begin(), f.sets_.end());
  return f;
}

SetFamily SetFamily::block_family(std::vector<VertexSet> blocks) {
  SetFamily f;
  f.block_implicit_ = true;
  if (!blocks.empty()) {
    VertexSet covered(blocks.front().universe());
    for (const auto& b : blocks) {
      if (b.empty() || b.intersects(covered)) throw std::invalid_argument("blocks must be nonempty and disjoint");
      covered |= b;
    }
    if (covered != VertexSet::full(covered.universe())) throw std::invalid_argument("blocks must cover E^0");
  }
  std::sort(blocks.begin(), blocks.end());
  f.sets_ = std::move(blocks);
  return f;
}

bool SetFamily::contains(const VertexSet& s) const {
  if (s.empty()) return true;
  if (!block_implicit_) return lookup_.contains(s);
  for (const auto& b : sets_)
    if (b.intersects(s) && !b.is_subset_of(s)) return false;
  return true;
}

std::size_t SetFamily::size() const {
  if (!block_implicit_) return sets_.size();
  if (sets_.size() >= 63) return static_cast<std::size_t>(-1);
  return (std::size_t{1} << sets_.size()) - 1;
}

std::vector<VertexSet> SetFamily::materialize(std::size_t max_family) const {
  if (!block_implicit_) return sets_;
  if (size() > max_family) throw ResourceError("--cap-family", max_family);
  std::vector<VertexSet> out;
  for (std::size_t mask = 1; mask <= size(); ++mask) {
    VertexSet u(sets_.front().universe());
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if ((mask >> i) & 1u) u |= sets_[i];
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetFamily smallest_accommodating(const LabelledGraph& g, const Limits& limits) {
  require_valid(g);
  const VertexSet all = g.all_vertices();
  const auto aut = SubsetAutomaton::build(g, std::span(&all, 1), limits.max_states);

  // Closure under intersections and relative ranges first. Unions distribute
  // over both, so the accommodating family is exactly the set of unions of
  // this intersection/range closure.
  std::vector<VertexSet> core;
  std::unordered_set<VertexSet, VertexSetHash> in_core;
  std::vector<std::size_t> pending;
  auto add = [&](VertexSet s) {
    if (s.empty() || in_core.contains(s)) return;
    if (core.size() >= limits.max_family) throw ResourceError("--cap-family", limits.max_family);
    in_core.insert(s);
    core.push_back(std::move(s));
    pending.push_back(core.size() - 1);
  };
  for (StateId s = 0; s < aut.state_count(); ++s)
    for (LabelId a = 0; a < aut.label_count(); ++a)
      if (aut.next(s, a) != kNoState) add(aut.state(aut.next(s, a)));
  while (!pending.empty()) {
    const std::size_t i = pending.back();
    pending.pop_back();
    for (LabelId a = 0; a < g.label_count(); ++a) add(g.step(core[i], a));
    for (std::size_t j = 0; j < core.size(); ++j) add(core[i] & core[j]);
  }

  std::vector<VertexSet> family;
  std::unordered_set<VertexSet, VertexSetHash> in_family;
  for (const auto& m : core) {
    const std::size_t existing = family.size();
    auto push = [&](VertexSet s) {
      if (!in_family.insert(s).second) return;
      if (family.size() >= limits.max_family) throw ResourceError("--cap-family", limits.max_family);
      family.push_back(std::move(s));
    };
    for (std::size_t j = 0; j < existing; ++j) push(family[j] | m);
    push(m);
  }
  return SetFamily::explicit_family(std::move(family));
}

bool is_accommodating(const LabelledGraph& g, const SetFamily& family) {
  for (LabelId a = 0; a < g.label_count(); ++a)
    if (!family.contains(g.step(g.all_vertices(), a))) return false;
  if (family.is_block_implicit()) {
    for (const auto& b : family.blocks())
      for (LabelId a = 0; a < g.label_count(); ++a)
        if (!family.contains(g.step(b, a))) return false;
    return true;
  }
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (LabelId a = 0; a < g.label_count(); ++a)
      if (!family.contains(g.step(members[i], a))) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!family.contains(members[i] & members[j]) || !family.contains(members[i] | members[j])) return false;
  }
  return true;
}

SetFamily bar_e(const StablePartition& stable) { return SetFamily::block_family(stable.limit.blocks); }

SetFamily bar_e(const LabelledGraph& g, const Limits& limits) { return bar_e(stable_partition(g, limits)); }

bool singleton_condition(const LabelledGraph& g, const Limits& limits) {
  return stable_partition(g, limits).limit.is_discrete();
}

}  // namespace lgs
