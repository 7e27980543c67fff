#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lgs/accommodating.hpp"
#include "lgs/algebra.hpp"
#include "lgs/graph.hpp"

// Brute-force counterparts of the exact deciders. They share the graph type
// and basic set operations with the library but none of its algorithms:
// ranges come from explicit path enumeration, families from naive fixpoint
// closure, partitions from grouping incoming words, and the infinite-word
// properties from bounded enumeration of words and lassos.
namespace lgs::oracle {

enum class Outcome { kMatch, kMismatch, kInconclusive };

const char* outcome_name(Outcome o);

struct Finding {
  Outcome outcome = Outcome::kMatch;
  std::string detail;
};

// Up to `max_vertices` vertices named v0.., up to `max_labels` labels named
// a, b, c, .. and at least one outgoing edge per vertex.
LabelledGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_labels = 3);

// Ends of all labelled paths with source in `from` spelling `w`, by
// depth-first path enumeration.
VertexSet path_range(const LabelledGraph& g, const VertexSet& from, const Word& w);

// All words of length 1..max_len that label some path starting in `from`.
std::vector<Word> readable_words(const LabelledGraph& g, const VertexSet& from, std::size_t max_len);

// Least family containing every r(w) and closed under single-letter ranges,
// pairwise intersections and pairwise unions, by repeated sweeps until
// nothing changes. nullopt if it grows past `cap`.
std::optional<std::vector<VertexSet>> naive_smallest_accommodating(const LabelledGraph& g, std::size_t cap);

// Vertices grouped by their set of incoming words of length 1..level.
std::vector<VertexSet> naive_omega(const LabelledGraph& g, std::size_t level);

// Vertices reachable from `from` by a path of length >= 1, by enumerating
// paths of length up to the vertex count.
VertexSet naive_reachable_after(const LabelledGraph& g, const VertexSet& from);

// Some pair of members and a word of length <= depth breaking
// r(A∩B, w) == r(A, w) ∩ r(B, w).
struct NaiveWlr {
  bool found = false;
  Word word;
};
NaiveWlr naive_wlr(const LabelledGraph& g, const std::vector<VertexSet>& family, std::size_t depth);

// Naive rewriting of a product of generators s_a, s_a^*, p_A into
// s_α p_A s_β^* form, one adjacent pair at a time.
struct Generator {
  enum class Kind { kS, kSStar, kP };
  Kind kind;
  LabelId label = 0;
  VertexSet set;
};
std::optional<Term> naive_normal_form(const LabelledGraph& g, std::vector<Generator> product);
std::vector<Generator> generators_of(const LabelledGraph& g, const Term& t);

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::size_t max_vertices = 6;
  std::size_t max_labels = 3;
  std::size_t depth = 6;  // word/lasso bound for the bounded oracles
};

struct CheckTally {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t inconclusive = 0;
};

struct Mismatch {
  std::string check;
  std::string graph;  // canonical graph text
  std::string detail;
};

struct SuiteResult {
  std::map<std::string, CheckTally> tallies;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> inconclusive_log;
  bool ok() const { return mismatches.empty(); }
};

// Individual checks on one graph; keys of the tally map.
Finding check_relative_range(const LabelledGraph& g, std::mt19937_64& rng);
Finding check_accommodating(const LabelledGraph& g);
Finding check_omega(const LabelledGraph& g, std::size_t depth);
Finding check_wlr_smallest(const LabelledGraph& g, std::size_t depth);
Finding check_wlr_bar(const LabelledGraph& g, std::size_t depth);
Finding check_strong_cofinality(const LabelledGraph& g, std::size_t depth);
Finding check_cofinality(const LabelledGraph& g, std::size_t depth);
Finding check_disagreeable(const LabelledGraph& g, std::size_t depth);

void run_case(const LabelledGraph& g, const SuiteConfig& config, std::mt19937_64& rng, SuiteResult& result);
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace lgs::oracle

namespace lgs::oracle {

// s_α p_A s_β^* with |α|, |β| <= max_len, A drawn from the family members (or
// blocks' unions), not necessarily canonical.
Term random_term(const Algebra& alg, std::mt19937_64& rng, std::size_t max_len);
LinComb random_lincomb(const Algebra& alg, std::mt19937_64& rng, std::size_t max_terms, std::size_t max_len);

Finding check_algebra(const LabelledGraph& g, std::mt19937_64& rng);

}  // namespace lgs::oracle
