#include "lgs/oracle/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "lgs/cofinality.hpp"
#include "lgs/disagreeable.hpp"
#include "lgs/error.hpp"
#include "lgs/wlr.hpp"

namespace lgs::oracle {
namespace {

// Plain adjacency rebuilt from the edge list.
struct Adjacency {
  std::vector<std::vector<std::pair<LabelId, VertexId>>> out;
  std::vector<std::vector<std::pair<LabelId, VertexId>>> in;

  explicit Adjacency(const LabelledGraph& g) : out(g.vertex_count()), in(g.vertex_count()) {
    for (const auto& e : g.edges()) {
      out[e.src].emplace_back(e.label, e.dst);
      in[e.dst].emplace_back(e.label, e.src);
    }
  }
};

VertexSet letter_step(const LabelledGraph& g, const Adjacency& adj, const VertexSet& from, LabelId a) {
  VertexSet out = g.empty_set();
  from.for_each([&](VertexId v) {
    for (auto [b, t] : adj.out[v])
      if (b == a) out.insert(t);
  });
  return out;
}

Finding mismatch(std::string detail) { return {Outcome::kMismatch, std::move(detail)}; }
Finding inconclusive(std::string detail) { return {Outcome::kInconclusive, std::move(detail)}; }

bool naive_has_period(const Word& w, std::size_t p) {
  if (p == 0 || p >= w.size()) return false;
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kMatch: return "match";
    case Outcome::kMismatch: return "mismatch";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

LabelledGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_labels) {
  std::uniform_int_distribution<std::size_t> nv(1, std::max<std::size_t>(1, max_vertices));
  std::uniform_int_distribution<std::size_t> nl(1, std::max<std::size_t>(1, max_labels));
  const std::size_t n = nv(rng);
  const std::size_t k = nl(rng);
  const double density = std::array{0.05, 0.12, 0.25}[std::uniform_int_distribution<int>(0, 2)(rng)];
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  auto label = [](std::size_t a) { return std::string(1, static_cast<char>('a' + a)); };
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  std::uniform_int_distribution<std::size_t> pick_v(0, n - 1), pick_l(0, k - 1);
  for (std::size_t v = 0; v < n; ++v) triples.emplace(v, pick_l(rng), pick_v(rng));
  std::bernoulli_distribution extra(density);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t t = 0; t < n; ++t)
        if (extra(rng)) triples.emplace(v, a, t);
  std::vector<NamedEdge> edges;
  for (auto [v, a, t] : triples) edges.push_back({names[v], names[t], label(a)});
  return LabelledGraph(std::move(names), edges);
}

VertexSet path_range(const LabelledGraph& g, const VertexSet& from, const Word& w) {
  const Adjacency adj(g);
  VertexSet out = g.empty_set();
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId v, std::size_t i) {
    if (i == w.size()) {
      out.insert(v);
      return;
    }
    for (auto [a, t] : adj.out[v])
      if (a == w[i]) walk(t, i + 1);
  };
  from.for_each([&](VertexId v) { walk(v, 0); });
  return out;
}

std::vector<Word> readable_words(const LabelledGraph& g, const VertexSet& from, std::size_t max_len) {
  const Adjacency adj(g);
  std::vector<Word> out;
  Word w;
  std::function<void(const VertexSet&)> grow = [&](const VertexSet& at) {
    if (w.size() == max_len) return;
    for (LabelId a = 0; a < g.label_count(); ++a) {
      VertexSet next = letter_step(g, adj, at, a);
      if (next.empty()) continue;
      w.push_back(a);
      out.push_back(w);
      grow(next);
      w.pop_back();
    }
  };
  grow(from);
  return out;
}

std::optional<std::vector<VertexSet>> naive_smallest_accommodating(const LabelledGraph& g, std::size_t cap) {
  std::set<VertexSet> family;
  for (LabelId a = 0; a < g.label_count(); ++a) family.insert(path_range(g, g.all_vertices(), {a}));
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<VertexSet> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::vector<VertexSet> found;
      for (LabelId a = 0; a < g.label_count(); ++a) found.push_back(path_range(g, current[i], {a}));
      for (std::size_t j = 0; j < current.size(); ++j) {
        found.push_back(current[i] & current[j]);
        found.push_back(current[i] | current[j]);
      }
      for (auto& s : found)
        if (!s.empty() && family.insert(std::move(s)).second) changed = true;
      if (family.size() > cap) return std::nullopt;
    }
  }
  return std::vector<VertexSet>(family.begin(), family.end());
}

std::vector<VertexSet> naive_omega(const LabelledGraph& g, std::size_t level) {
  const Adjacency adj(g);
  std::vector<std::set<Word>> incoming(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Word rev;
    std::function<void(VertexId)> back = [&](VertexId u) {
      if (rev.size() == level) return;
      for (auto [a, s] : adj.in[u]) {
        rev.push_back(a);
        incoming[v].insert(Word(rev.rbegin(), rev.rend()));
        back(s);
        rev.pop_back();
      }
    };
    back(v);
  }
  std::vector<VertexSet> blocks;
  std::vector<const std::set<Word>*> keys;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t i = 0;
    while (i < keys.size() && *keys[i] != incoming[v]) ++i;
    if (i == keys.size()) {
      keys.push_back(&incoming[v]);
      blocks.push_back(g.empty_set());
    }
    blocks[i].insert(v);
  }
  return blocks;
}

VertexSet naive_reachable_after(const LabelledGraph& g, const VertexSet& from) {
  const Adjacency adj(g);
  VertexSet out = g.empty_set();
  VertexSet layer = from;
  for (std::size_t len = 1; len <= g.vertex_count(); ++len) {
    VertexSet next = g.empty_set();
    layer.for_each([&](VertexId v) {
      for (auto [a, t] : adj.out[v]) next.insert(t);
    });
    out |= next;
    layer = next;
  }
  return out;
}

NaiveWlr naive_wlr(const LabelledGraph& g, const std::vector<VertexSet>& family, std::size_t depth) {
  const Adjacency adj(g);
  NaiveWlr result;
  Word w;
  std::function<bool(const VertexSet&, const VertexSet&, const VertexSet&)> walk =
      [&](const VertexSet& ra, const VertexSet& rb, const VertexSet& rab) {
        if (!w.empty() && (ra & rb) != rab) return true;
        if (w.size() == depth) return false;
        for (LabelId a = 0; a < g.label_count(); ++a) {
          VertexSet na = letter_step(g, adj, ra, a);
          VertexSet nb = letter_step(g, adj, rb, a);
          if (na.empty() || nb.empty()) continue;
          w.push_back(a);
          if (walk(na, nb, letter_step(g, adj, rab, a))) return true;
          w.pop_back();
        }
        return false;
      };
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      w.clear();
      if (walk(family[i], family[j], family[i] & family[j])) {
        result.found = true;
        result.word = w;
        return result;
      }
    }
  return result;
}

std::vector<Generator> generators_of(const LabelledGraph&, const Term& t) {
  std::vector<Generator> out;
  for (LabelId a : t.alpha) out.push_back({Generator::Kind::kS, a, {}});
  out.push_back({Generator::Kind::kP, 0, t.a});
  for (auto it = t.beta.rbegin(); it != t.beta.rend(); ++it) out.push_back({Generator::Kind::kSStar, *it, {}});
  return out;
}

std::optional<Term> naive_normal_form(const LabelledGraph& g, std::vector<Generator> product) {
  using K = Generator::Kind;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < product.size(); ++i) {
      Generator& x = product[i];
      Generator& y = product[i + 1];
      if (x.kind == K::kP && y.kind == K::kP) {
        x.set &= y.set;
        product.erase(product.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      } else if (x.kind == K::kP && y.kind == K::kS) {
        // p_A s_a = s_a p_{r(A,a)}
        VertexSet r = path_range(g, x.set, {y.label});
        x = {K::kS, y.label, {}};
        y = {K::kP, 0, std::move(r)};
      } else if (x.kind == K::kSStar && y.kind == K::kP) {
        // s_a^* p_A = p_{r(A,a)} s_a^*
        VertexSet r = path_range(g, y.set, {x.label});
        const LabelId a = x.label;
        x = {K::kP, 0, std::move(r)};
        y = {K::kSStar, a, {}};
      } else if (x.kind == K::kSStar && y.kind == K::kS) {
        if (x.label != y.label) return std::nullopt;
        x = {K::kP, 0, path_range(g, g.all_vertices(), {x.label})};
        product.erase(product.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  Term t{{}, g.all_vertices(), {}};
  for (const auto& x : product) {
    switch (x.kind) {
      case K::kS: t.alpha.push_back(x.label); break;
      case K::kP: t.a &= x.set; break;
      case K::kSStar: t.beta.insert(t.beta.begin(), x.label); break;
    }
  }
  if (!t.alpha.empty()) t.a &= path_range(g, g.all_vertices(), t.alpha);
  if (!t.beta.empty()) t.a &= path_range(g, g.all_vertices(), t.beta);
  if (t.a.empty()) return std::nullopt;
  return t;
}

Term random_term(const Algebra& alg, std::mt19937_64& rng, std::size_t max_len) {
  const LabelledGraph& g = alg.graph();
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<LabelId> letter(0, static_cast<LabelId>(g.label_count() - 1));
  auto word = [&] {
    Word w(len(rng));
    for (auto& a : w) a = letter(rng);
    return w;
  };
  Term t;
  t.alpha = word();
  t.beta = word();
  const SetFamily& f = alg.family();
  if (f.is_block_implicit()) {
    t.a = g.empty_set();
    for (const auto& b : f.blocks())
      if (std::bernoulli_distribution(0.5)(rng)) t.a |= b;
    if (t.a.empty()) t.a = f.blocks().front();
  } else {
    const auto m = f.members();
    t.a = m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng)];
  }
  return t;
}

LinComb random_lincomb(const Algebra& alg, std::mt19937_64& rng, std::size_t max_terms, std::size_t max_len) {
  LinComb out;
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Term t = random_term(alg, rng, max_len);
    out += alg.term(t.alpha, t.a, t.beta, Rational(num(rng), den(rng)));
  }
  return out;
}

Finding check_relative_range(const LabelledGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, 4);
  std::uniform_int_distribution<LabelId> letter(0, static_cast<LabelId>(g.label_count() - 1));
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSet a = g.empty_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (coin(rng)) a.insert(v);
    Word u(len(rng)), w(len(rng));
    for (auto& x : u) x = letter(rng);
    for (auto& x : w) x = letter(rng);
    Word uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    const VertexSet direct = relative_range(g, a, uw);
    const VertexSet composed = relative_range(g, relative_range(g, a, u), w);
    const VertexSet expected = path_range(g, a, uw);
    if (direct != expected || composed != expected)
      return mismatch("r(" + format_set(g, a) + ", " + format_word(g, uw) + "): decider " + format_set(g, direct) +
                      ", composed " + format_set(g, composed) + ", paths " + format_set(g, expected));
  }
  return {};
}

Finding check_accommodating(const LabelledGraph& g) {
  const auto naive = naive_smallest_accommodating(g, 5000);
  if (!naive) return inconclusive("naive closure exceeded 5000 sets");
  const auto fam = smallest_accommodating(g);
  const std::vector<VertexSet> got(fam.members().begin(), fam.members().end());
  if (got != *naive)
    return mismatch("family sizes " + std::to_string(got.size()) + " vs naive " + std::to_string(naive->size()));
  return {};
}

Finding check_omega(const LabelledGraph& g, std::size_t depth) {
  const std::size_t top = std::min<std::size_t>(depth, 6);
  std::vector<std::vector<VertexSet>> naive;
  for (std::size_t l = 1; l <= top; ++l) {
    naive.push_back(naive_omega(g, l));
    if (omega(g, l).blocks != naive.back()) return mismatch("Omega_" + std::to_string(l) + " differs");
  }
  const auto stable = stable_partition(g);
  if (!naive.empty() && !stable.limit.refines(Partition{0, naive.back()}))
    return mismatch("limit does not refine naive Omega_" + std::to_string(top));
  if (stable.level > top) {
    for (const auto& p : naive)
      if (p == stable.limit.blocks) return mismatch("l* = " + std::to_string(stable.level) + " but an earlier level equals the limit");
    return inconclusive("l* = " + std::to_string(stable.level) + " beyond depth " + std::to_string(top));
  }
  for (std::size_t l = 1; l <= top; ++l) {
    const bool equal = naive[l - 1] == stable.limit.blocks;
    if (equal != (l >= stable.level)) return mismatch("l* = " + std::to_string(stable.level) + " inconsistent at level " + std::to_string(l));
  }
  return {};
}

namespace {

Finding compare_wlr(const LabelledGraph& g, const WlrVerdict& verdict, const std::vector<VertexSet>& family,
                    std::size_t depth) {
  const NaiveWlr naive = naive_wlr(g, family, depth);
  if (verdict.holds) {
    if (naive.found) return mismatch("decider holds, naive counterexample " + format_word(g, naive.word));
    return {};
  }
  const auto& cx = *verdict.counterexample;
  if (path_range(g, cx.a & cx.b, cx.word) == (path_range(g, cx.a, cx.word) & path_range(g, cx.b, cx.word)))
    return mismatch("decider counterexample " + format_word(g, cx.word) + " does not replay");
  if (naive.found) return {};
  if (cx.word.size() <= depth) return mismatch("naive search missed a counterexample of length " + std::to_string(cx.word.size()));
  return inconclusive("counterexample longer than depth");
}

}  // namespace

Finding check_wlr_smallest(const LabelledGraph& g, std::size_t depth) {
  const auto naive = naive_smallest_accommodating(g, 5000);
  if (!naive) return inconclusive("naive closure exceeded 5000 sets");
  const auto verdict = check_wlr(g, SetFamily::explicit_family(*naive));
  return compare_wlr(g, verdict, *naive, depth);
}

Finding check_wlr_bar(const LabelledGraph& g, std::size_t depth) {
  const SetFamily fam = bar_e(g);
  const auto verdict = check_wlr(g, fam);
  return compare_wlr(g, verdict, fam.materialize(1u << 12), depth);
}

namespace {

// Every N >= 1 along prefix.cycle^inf keeps r({w}, x[1..N]) nonempty and
// r(source, x[1..N]) outside `cover`.
bool lasso_is_bad(const LabelledGraph& g, const Adjacency& adj, VertexId w, const VertexSet& source,
                  const Word& prefix, const Word& cycle, const VertexSet& cover) {
  VertexSet from_w = g.singleton(w);
  VertexSet from_s = source;
  auto advance = [&](LabelId a) {
    from_w = letter_step(g, adj, from_w, a);
    from_s = letter_step(g, adj, from_s, a);
    return !from_w.empty() && !from_s.is_subset_of(cover);
  };
  for (LabelId a : prefix)
    if (!advance(a)) return false;
  std::set<std::pair<VertexSet, VertexSet>> seen;
  while (seen.emplace(from_w, from_s).second)
    for (LabelId a : cycle)
      if (!advance(a)) return false;
  return true;
}

struct NaiveCofinality {
  bool found = false;
  bool exhausted = true;
  std::string detail;
};

NaiveCofinality naive_cofinality(const LabelledGraph& g, const std::vector<VertexSet>& sources,
                                 const std::vector<VertexSet>& targets, std::size_t max_len, std::size_t budget) {
  const Adjacency adj(g);
  std::vector<VertexSet> covers;
  for (const auto& t : targets) covers.push_back(naive_reachable_after(g, t));
  NaiveCofinality out;
  std::size_t spent = 0;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    const VertexSet& source = *std::find_if(sources.begin(), sources.end(), [&](const VertexSet& s) { return s.contains(w); });
    for (const Word& x : readable_words(g, g.singleton(w), max_len)) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        const Word prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
        const Word cycle(x.begin() + static_cast<std::ptrdiff_t>(j), x.end());
        for (std::size_t t = 0; t < targets.size(); ++t) {
          if (++spent > budget) {
            out.exhausted = false;
            return out;
          }
          if (lasso_is_bad(g, adj, w, source, prefix, cycle, covers[t])) {
            out.found = true;
            out.detail = "w=" + g.vertex_name(w) + " target " + format_set(g, targets[t]) + " lasso (" +
                         format_word(g, prefix) + ", " + format_word(g, cycle) + ")";
            return out;
          }
        }
      }
    }
  }
  return out;
}

Finding compare_cofinality(const LabelledGraph& g, CofinalityKind kind, std::size_t depth) {
  const auto stable = stable_partition(g);
  const std::size_t top = std::min<std::size_t>(depth, 6);
  std::vector<VertexSet> sources;
  if (kind == CofinalityKind::kStrong) {
    sources = naive_omega(g, 1);
  } else {
    sources = naive_omega(g, std::max<std::size_t>(top, 1));
    if (sources != stable.limit.blocks) return inconclusive("naive partitions do not reach the limit by depth");
  }
  std::set<VertexSet> target_set;
  for (std::size_t l = 1; l <= std::max<std::size_t>(top, 1); ++l)
    for (auto& b : naive_omega(g, l)) target_set.insert(std::move(b));
  const std::vector<VertexSet> targets(target_set.begin(), target_set.end());

  const auto verdict = check_cofinality(g, kind, stable);
  const auto naive = naive_cofinality(g, sources, targets, std::max<std::size_t>(depth, 1), 400000);
  if (verdict.holds) {
    if (naive.found) return mismatch("decider holds, naive bad lasso " + naive.detail);
    if (!naive.exhausted) return inconclusive("lasso budget exhausted");
    return {};
  }
  const auto& wit = *verdict.witness;
  if (!replay_cofinality_witness(g, wit) ||
      !lasso_is_bad(g, Adjacency(g), wit.w, wit.source, wit.x.prefix, wit.x.cycle,
                    naive_reachable_after(g, wit.target_block)))
    return mismatch("decider witness does not replay");
  if (naive.found) return {};
  const bool reachable_target = target_set.contains(wit.target_block);
  if (naive.exhausted && reachable_target && wit.x.prefix.size() + wit.x.cycle.size() <= depth)
    return mismatch("naive enumeration missed a bad lasso of length " +
                    std::to_string(wit.x.prefix.size() + wit.x.cycle.size()));
  return inconclusive("decider witness outside the enumerated range");
}

}  // namespace

Finding check_strong_cofinality(const LabelledGraph& g, std::size_t depth) {
  return compare_cofinality(g, CofinalityKind::kStrong, depth);
}

Finding check_cofinality(const LabelledGraph& g, std::size_t depth) {
  return compare_cofinality(g, CofinalityKind::kPlain, depth);
}

Finding check_disagreeable(const LabelledGraph& g, std::size_t depth) {
  const Adjacency adj(g);
  Finding worst;
  for (std::size_t l = 1; l <= 4; ++l) {
    for (const VertexSet& s : naive_omega(g, l)) {
      const auto decision = disagreeable_block(g, s, l);
      // Depth-first search for a word from s with no period <= l.
      const std::size_t bound = l + 1 + depth;
      std::size_t budget = 200000;
      bool exhausted = true;
      std::optional<Word> found;
      Word w;
      std::function<void(const VertexSet&)> walk = [&](const VertexSet& at) {
        if (found || !exhausted) return;
        if (w.size() > l) {
          bool agreeable = false;
          for (std::size_t p = 1; p <= l && !agreeable; ++p) agreeable = naive_has_period(w, p);
          if (!agreeable) {
            found = w;
            return;
          }
        }
        if (w.size() == bound) return;
        for (LabelId a = 0; a < g.label_count() && !found; ++a) {
          if (--budget == 0) {
            exhausted = false;
            return;
          }
          VertexSet next = letter_step(g, adj, at, a);
          if (next.empty()) continue;
          w.push_back(a);
          walk(next);
          w.pop_back();
        }
      };
      walk(s);
      const std::string where = format_set(g, s) + " at l=" + std::to_string(l);
      if (found) {
        if (!decision.disagreeable) return mismatch(where + ": naive word " + format_word(g, *found) + " has no period <= l");
        continue;
      }
      if (!decision.disagreeable) continue;
      if (decision.witness && decision.witness->size() <= bound && exhausted)
        return mismatch(where + ": decider witness " + format_word(g, *decision.witness) + " missed by enumeration");
      worst = inconclusive(where + ": no word within the enumeration bound");
    }
  }
  return worst;
}

Finding check_algebra(const LabelledGraph& g, std::mt19937_64& rng) {
  std::optional<Algebra> alg;
  try {
    alg.emplace(Algebra::smallest(g));
  } catch (const FamilyError&) {
    return inconclusive("E^{0,-} is not weakly left-resolving");
  }
  for (int trial = 0; trial < 30; ++trial) {
    const Term x = random_term(*alg, rng, 3);
    const Term y = random_term(*alg, rng, 3);
    const LinComb fast = alg->multiply(alg->term(x.alpha, x.a, x.beta), alg->term(y.alpha, y.a, y.beta));
    auto product = generators_of(g, x);
    const auto tail = generators_of(g, y);
    product.insert(product.end(), tail.begin(), tail.end());
    const auto naive = naive_normal_form(g, product);
    LinComb slow;
    if (naive) slow.add(*naive, 1);
    if (fast != slow)
      return mismatch(format_term(g, x) + " * " + format_term(g, y) + ": " + format_lincomb(g, fast) + " vs " +
                      format_lincomb(g, slow));
  }
  return {};
}

void run_case(const LabelledGraph& g, const SuiteConfig& config, std::mt19937_64& rng, SuiteResult& result) {
  auto record = [&](const std::string& name, const Finding& f) {
    auto& t = result.tallies[name];
    switch (f.outcome) {
      case Outcome::kMatch: ++t.match; break;
      case Outcome::kMismatch:
        ++t.mismatch;
        result.mismatches.push_back({name, serialize(g), f.detail});
        break;
      case Outcome::kInconclusive:
        ++t.inconclusive;
        result.inconclusive_log.push_back(name + ": " + f.detail);
        break;
    }
  };
  record("relative-range", check_relative_range(g, rng));
  record("accommodating", check_accommodating(g));
  record("omega", check_omega(g, config.depth));
  record("wlr-smallest", check_wlr_smallest(g, config.depth));
  record("wlr-bar", check_wlr_bar(g, config.depth));
  record("strong-cofinal", check_strong_cofinality(g, config.depth));
  record("cofinal", check_cofinality(g, config.depth));
  record("disagreeable", check_disagreeable(g, config.depth));
  record("algebra", check_algebra(g, rng));
}

SuiteResult run_suite(const SuiteConfig& config) {
  std::mt19937_64 rng(config.seed);
  SuiteResult result;
  for (std::size_t i = 0; i < config.cases; ++i) {
    const LabelledGraph g = random_graph(rng, config.max_vertices, config.max_labels);
    run_case(g, config, rng, result);
  }
  return result;
}

}  // namespace lgs::oracle
