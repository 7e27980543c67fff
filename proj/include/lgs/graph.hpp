#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgs/vertex_set.hpp"

namespace lgs {

// A finite sequence of labels. The empty word only appears as an internal
// sentinel with relative_range(A, {}) == A.
using Word = std::vector<LabelId>;

struct Edge {
  VertexId src;
  VertexId dst;
  LabelId label;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge given by names; used to build graphs programmatically.
struct NamedEdge {
  std::string src;
  std::string dst;
  std::string label;
};

struct Violation {
  enum class Kind { kEmptyGraph, kSink, kDuplicateEdge };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Finite directed graph with labelled edges. Vertices keep the order they are
// given in; labels are sorted by name and form exactly the set of labels
// appearing on edges. Immutable after construction.
class LabelledGraph {
 public:
  // Every endpoint named in `edges` must appear in `vertices`.
  LabelledGraph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  // Vertices in first-appearance order over the edge list.
  static LabelledGraph from_edges(const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t label_count() const { return label_names_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& label_name(LabelId a) const { return label_names_[a]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& label_names() const { return label_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<LabelId> find_label(std::string_view name) const;

  // Sorted by (src, label, dst); duplicates are kept so validate() can see them.
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> successors(VertexId v, LabelId a) const {
    return slice(out_offsets_, out_targets_, v, a);
  }
  std::span<const VertexId> predecessors(VertexId v, LabelId a) const {
    return slice(in_offsets_, in_sources_, v, a);
  }
  std::size_t out_degree(VertexId v) const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet singleton(VertexId v) const { return VertexSet(vertex_count(), {v}); }

  // r(A, a) for a single letter.
  VertexSet step(const VertexSet& from, LabelId a) const;

  const ValidationReport& validation() const { return validation_; }
  bool is_valid() const { return validation_.ok(); }

 private:
  std::span<const VertexId> slice(const std::vector<std::size_t>& offsets,
                                  const std::vector<VertexId>& data, VertexId v,
                                  LabelId a) const {
    const std::size_t k = static_cast<std::size_t>(v) * label_count() + a;
    return {data.data() + offsets[k], offsets[k + 1] - offsets[k]};
  }

  std::vector<std::string> vertex_names_;
  std::vector<std::string> label_names_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  ValidationReport validation_;
};

// Line format: `# comment`, `vertex <id>`, `edge <src> <dst> <label>`.
// When any `vertex` line is present every edge endpoint must be declared.
LabelledGraph parse_graph(std::string_view text);

// Canonical text: all vertices in internal order, then edges sorted by
// (src, label, dst).
std::string serialize(const LabelledGraph& g);

ValidationReport validate(const LabelledGraph& g);

// Throws InvalidGraphError carrying the first violation.
void require_valid(const LabelledGraph& g);

VertexSet relative_range(const LabelledGraph& g, const VertexSet& from, const Word& w);

// r(w) = relative_range(E^0, w); `w` must be nonempty.
VertexSet range_of_word(const LabelledGraph& g, const Word& w);

// Labels of all paths of length 1..level ending at v.
std::set<Word> in_label_words(const LabelledGraph& g, VertexId v, std::size_t level);

// Words are written as label names joined by '.', e.g. "a1.a3".
Word parse_word(const LabelledGraph& g, std::string_view text);
std::string format_word(const LabelledGraph& g, const Word& w);

// Vertex sets are written as `{v1,v2}` in internal vertex order.
std::string format_set(const LabelledGraph& g, const VertexSet& s);
VertexSet make_set(const LabelledGraph& g, std::initializer_list<std::string_view> names);
VertexSet make_set(const LabelledGraph& g, const std::vector<std::string>& names);

}  // namespace lgs
