#include "lgs/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "lgs/error.hpp"

namespace lgs {

SubsetAutomaton SubsetAutomaton::build(const LabelledGraph& g, std::span<const VertexSet> seeds,
                                       std::size_t max_states) {
  if (seeds.empty()) throw std::invalid_argument("SubsetAutomaton::build: no seeds");
  SubsetAutomaton aut;
  aut.label_count_ = g.label_count();
  std::deque<StateId> queue;
  auto intern = [&](const VertexSet& s) -> StateId {
    auto it = aut.index_.find(s);
    if (it != aut.index_.end()) return it->second;
    if (aut.states_.size() >= max_states) throw ResourceError("--cap-states", max_states);
    const auto id = static_cast<StateId>(aut.states_.size());
    aut.states_.push_back(s);
    aut.trans_.resize(aut.trans_.size() + aut.label_count_, kNoState);
    aut.index_.emplace(s, id);
    queue.push_back(id);
    return id;
  };
  for (const auto& s : seeds) {
    if (s.empty()) throw std::invalid_argument("SubsetAutomaton::build: empty seed");
    aut.seeds_.push_back(intern(s));
  }
  while (!queue.empty()) {
    const StateId cur = queue.front();
    queue.pop_front();
    for (LabelId a = 0; a < aut.label_count_; ++a) {
      VertexSet nxt = g.step(aut.states_[cur], a);
      if (nxt.empty()) continue;
      const StateId id = intern(nxt);
      aut.trans_[static_cast<std::size_t>(cur) * aut.label_count_ + a] = id;
    }
  }
  return aut;
}

std::optional<StateId> SubsetAutomaton::find(const VertexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId SubsetAutomaton::run(StateId s, const Word& w) const {
  for (LabelId a : w) {
    if (s == kNoState) return kNoState;
    s = next(s, a);
  }
  return s;
}

std::size_t SubsetAutomaton::out_degree(StateId s) const {
  std::size_t n = 0;
  for (LabelId a = 0; a < label_count_; ++a) n += next(s, a) != kNoState ? 1 : 0;
  return n;
}

std::string SubsetAutomaton::to_dot(const LabelledGraph& g) const {
  std::ostringstream out;
  out << "digraph subset_automaton {\n";
  for (StateId s = 0; s < state_count(); ++s) {
    const bool seed = std::find(seeds_.begin(), seeds_.end(), s) != seeds_.end();
    out << "  s" << s << " [label=\"" << format_set(g, states_[s]) << "\"" << (seed ? ", shape=box" : "")
        << "];\n";
  }
  for (StateId s = 0; s < state_count(); ++s)
    for (LabelId a = 0; a < label_count_; ++a)
      if (next(s, a) != kNoState)
        out << "  s" << s << " -> s" << next(s, a) << " [label=\"" << g.label_name(a) << "\"];\n";
  out << "}\n";
  return out.str();
}

namespace {

std::vector<char> forward_closure(const SubsetAutomaton& aut, const std::vector<StateId>& from) {
  std::vector<char> seen(aut.state_count(), 0);
  std::vector<StateId> stack;
  for (StateId s : from) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (LabelId a = 0; a < aut.label_count(); ++a) {
      const StateId t = aut.next(s, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

// States of `reachable` lying on a directed cycle (iterative Tarjan).
std::vector<char> cyclic_states(const SubsetAutomaton& aut, const std::vector<char>& reachable) {
  const std::size_t n = aut.state_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0), cyclic(n, 0);
  std::vector<StateId> stack;
  int counter = 0;
  struct Frame {
    StateId s;
    LabelId a;
  };
  for (StateId root = 0; root < n; ++root) {
    if (!reachable[root] || index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.a < aut.label_count()) {
        const StateId t = aut.next(f.s, f.a++);
        if (t == kNoState) continue;
        if (index[t] < 0) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.s] = std::min(low[f.s], index[t]);
        }
        continue;
      }
      const StateId s = f.s;
      call.pop_back();
      if (!call.empty()) low[call.back().s] = std::min(low[call.back().s], low[s]);
      if (low[s] == index[s]) {
        std::vector<StateId> comp;
        StateId t;
        do {
          t = stack.back();
          stack.pop_back();
          on_stack[t] = 0;
          comp.push_back(t);
        } while (t != s);
        bool has_cycle = comp.size() > 1;
        if (!has_cycle)
          for (LabelId a = 0; a < aut.label_count(); ++a) has_cycle = has_cycle || aut.next(s, a) == s;
        if (has_cycle)
          for (StateId c : comp) cyclic[c] = 1;
      }
    }
  }
  return cyclic;
}

}  // namespace

VertexSet reach_union(const SubsetAutomaton& aut, StateId s) {
  std::vector<StateId> succ;
  for (LabelId a = 0; a < aut.label_count(); ++a)
    if (aut.next(s, a) != kNoState) succ.push_back(aut.next(s, a));
  VertexSet out(aut.state(s).universe());
  const auto seen = forward_closure(aut, succ);
  for (StateId t = 0; t < aut.state_count(); ++t)
    if (seen[t]) out |= aut.state(t);
  return out;
}

InfiniteLabels classify_infinite_labels(const SubsetAutomaton& aut, StateId s) {
  const auto reachable = forward_closure(aut, {s});
  const auto cyclic = cyclic_states(aut, reachable);
  std::vector<StateId> cycle_states;
  for (StateId t = 0; t < aut.state_count(); ++t)
    if (cyclic[t]) cycle_states.push_back(t);
  const auto fed = forward_closure(aut, cycle_states);
  for (StateId t = 0; t < aut.state_count(); ++t)
    if (fed[t] && aut.out_degree(t) >= 2) return {true, {}};

  // Past the first cycle state every continuation is forced, and before it no
  // state repeats, so a depth-first walk closes every path at its first
  // repeated state.
  InfiniteLabels result;
  std::vector<StateId> path{s};
  std::vector<LabelId> cursor{0};
  Word word;  // word.size() == path.size() - 1
  while (!path.empty()) {
    const LabelId a = cursor.back();
    if (a >= aut.label_count()) {
      path.pop_back();
      cursor.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    ++cursor.back();
    const StateId t = aut.next(path.back(), a);
    if (t == kNoState) continue;
    word.push_back(a);
    auto hit = std::find(path.begin(), path.end(), t);
    if (hit != path.end()) {
      const auto j = hit - path.begin();
      result.lassos.push_back(canonicalize({Word(word.begin(), word.begin() + j), Word(word.begin() + j, word.end())}));
      word.pop_back();
      continue;
    }
    path.push_back(t);
    cursor.push_back(0);
  }
  std::sort(result.lassos.begin(), result.lassos.end());
  result.lassos.erase(std::unique(result.lassos.begin(), result.lassos.end()), result.lassos.end());
  return result;
}

std::optional<LassoWitness> find_bad_lasso(const SubsetAutomaton& aut, StateId start, StateId paired,
                                           const std::function<bool(StateId, StateId)>& bad) {
  const std::size_t L = aut.label_count();
  using Key = std::uint64_t;
  auto key_of = [](StateId p, StateId q) { return (static_cast<Key>(p) << 32) | q; };

  // Explore the product restricted to transitions entering bad states.
  std::vector<std::pair<StateId, StateId>> nodes{{start, paired}};
  std::unordered_map<Key, std::size_t> index{{key_of(start, paired), 0}};
  std::vector<std::size_t> succ;  // nodes * L, npos if absent or not bad
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth{0};
  std::vector<char> is_bad{static_cast<char>(bad(start, paired) ? 1 : 0)};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    succ.resize(nodes.size() * L, npos);
    for (LabelId a = 0; a < L; ++a) {
      const StateId p = aut.next(nodes[i].first, a);
      const StateId q = aut.next(nodes[i].second, a);
      if (p == kNoState || q == kNoState || !bad(p, q)) continue;
      auto [it, fresh] = index.emplace(key_of(p, q), nodes.size());
      if (fresh) {
        nodes.emplace_back(p, q);
        depth.push_back(depth[i] + 1);
        is_bad.push_back(1);
      }
      succ.resize(nodes.size() * L, npos);
      succ[i * L + a] = it->second;
    }
  }
  const std::size_t n = nodes.size();
  succ.resize(n * L, npos);
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t i = 0; i < n; ++i)
    for (LabelId a = 0; a < L; ++a)
      if (succ[i * L + a] != npos) pred[succ[i * L + a]].push_back(i);

  // Nodes in BFS order already have nondecreasing depth.
  std::optional<std::pair<std::size_t, Word>> best;
  std::optional<std::size_t> best_prefix;
  std::vector<std::size_t> dist(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (!is_bad[q]) continue;
    if (best && depth[q] + 1 > best->first) break;
    // Distances to q inside the bad subgraph.
    std::fill(dist.begin(), dist.end(), npos);
    dist[q] = 0;
    std::deque<std::size_t> queue{q};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : pred[x])
        if (dist[y] == npos) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    std::size_t cycle_len = npos;
    for (LabelId a = 0; a < L; ++a) {
      const std::size_t t = succ[q * L + a];
      if (t != npos && dist[t] != npos) cycle_len = std::min(cycle_len, dist[t] + 1);
    }
    if (cycle_len == npos) continue;
    const std::size_t total = depth[q] + cycle_len;
    if (best && total > best->first) continue;

    auto greedy = [&](std::size_t from, std::size_t len) {
      Word w;
      std::size_t cur = from;
      for (std::size_t step = 0; step < len; ++step) {
        const std::size_t remaining = len - step - 1;
        for (LabelId a = 0; a < L; ++a) {
          const std::size_t t = succ[cur * L + a];
          if (t == npos || dist[t] != remaining) continue;
          w.push_back(a);
          cur = t;
          break;
        }
      }
      return w;
    };
    Word word = greedy(0, depth[q]);
    const std::size_t prefix_len = word.size();
    Word cyc = greedy(q, cycle_len);
    word.insert(word.end(), cyc.begin(), cyc.end());
    if (!best || total < best->first || word < best->second) {
      best = {total, std::move(word)};
      best_prefix = prefix_len;
    }
  }
  if (!best) return std::nullopt;
  LassoWitness w;
  w.prefix.assign(best->second.begin(), best->second.begin() + static_cast<std::ptrdiff_t>(*best_prefix));
  w.cycle.assign(best->second.begin() + static_cast<std::ptrdiff_t>(*best_prefix), best->second.end());
  return w;
}

}  // namespace lgs
