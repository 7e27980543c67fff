#include "lgs/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lgs/error.hpp"

namespace lgs {
namespace {

constexpr std::string_view kReservedChars = ".,{}[]#\"\\";

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7f) return false;
    if (kReservedChars.find(c) != std::string_view::npos) return false;
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// CSR adjacency keyed by (vertex, label).
void build_index(std::size_t n, std::size_t k, const std::vector<Edge>& edges, bool outgoing,
                 std::vector<std::size_t>& offsets, std::vector<VertexId>& data) {
  std::vector<std::vector<VertexId>> buckets(n * k);
  for (const Edge& e : edges) {
    const VertexId key_vertex = outgoing ? e.src : e.dst;
    buckets[static_cast<std::size_t>(key_vertex) * k + e.label].push_back(outgoing ? e.dst : e.src);
  }
  offsets.assign(n * k + 1, 0);
  data.clear();
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    auto& b = buckets[i];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    offsets[i] = data.size();
    data.insert(data.end(), b.begin(), b.end());
  }
  offsets[n * k] = data.size();
}

}  // namespace

LabelledGraph::LabelledGraph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges)
    : vertex_names_(std::move(vertices)) {
  std::unordered_map<std::string, VertexId> vindex;
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
    if (!vindex.emplace(vertex_names_[i], static_cast<VertexId>(i)).second)
      throw Error("duplicate vertex '" + vertex_names_[i] + "'");
  }
  std::set<std::string> labels;
  for (const auto& e : edges) labels.insert(e.label);
  label_names_.assign(labels.begin(), labels.end());
  std::map<std::string, LabelId> lindex;
  for (std::size_t i = 0; i < label_names_.size(); ++i)
    lindex.emplace(label_names_[i], static_cast<LabelId>(i));

  for (const auto& e : edges) {
    auto s = vindex.find(e.src);
    auto d = vindex.find(e.dst);
    if (s == vindex.end()) throw Error("unknown vertex '" + e.src + "'");
    if (d == vindex.end()) throw Error("unknown vertex '" + e.dst + "'");
    edges_.push_back({s->second, d->second, lindex.at(e.label)});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.src, x.label, x.dst) < std::tie(y.src, y.label, y.dst);
  });

  build_index(vertex_count(), label_count(), edges_, true, out_offsets_, out_targets_);
  build_index(vertex_count(), label_count(), edges_, false, in_offsets_, in_sources_);
  validation_ = validate(*this);
}

LabelledGraph LabelledGraph::from_edges(const std::vector<NamedEdge>& edges) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& e : edges) {
    for (const auto* n : {&e.src, &e.dst})
      if (seen.insert(*n).second) names.push_back(*n);
  }
  return LabelledGraph(std::move(names), edges);
}

std::optional<VertexId> LabelledGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::optional<LabelId> LabelledGraph::find_label(std::string_view name) const {
  auto it = std::lower_bound(label_names_.begin(), label_names_.end(), name);
  if (it == label_names_.end() || *it != name) return std::nullopt;
  return static_cast<LabelId>(it - label_names_.begin());
}

std::size_t LabelledGraph::out_degree(VertexId v) const {
  std::size_t n = 0;
  for (LabelId a = 0; a < label_count(); ++a) n += successors(v, a).size();
  return n;
}

VertexSet LabelledGraph::step(const VertexSet& from, LabelId a) const {
  VertexSet out = empty_set();
  from.for_each([&](VertexId v) {
    for (VertexId w : successors(v, a)) out.insert(w);
  });
  return out;
}

LabelledGraph parse_graph(std::string_view text) {
  struct PendingEdge {
    NamedEdge edge;
    std::size_t line;
  };
  std::vector<std::string> declared;
  std::map<std::string, std::size_t, std::less<>> declared_at;
  std::vector<PendingEdge> pending;
  std::vector<std::string> order;  // first appearance over all lines
  std::set<std::string, std::less<>> seen;
  auto note = [&](std::string_view id) {
    if (seen.emplace(id).second) order.emplace_back(id);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto hash = line.find('#');
    const auto tokens = split_ws(hash == std::string_view::npos ? line : line.substr(0, hash));
    if (tokens.empty()) continue;
    const std::string_view kw = tokens[0];
    if (kw == "vertex") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
      if (!is_token(tokens[1])) throw ParseError(line_no, "invalid vertex id '" + std::string(tokens[1]) + "'");
      if (declared_at.contains(tokens[1]))
        throw ParseError(line_no, "vertex '" + std::string(tokens[1]) + "' declared twice");
      declared_at.emplace(std::string(tokens[1]), line_no);
      declared.emplace_back(tokens[1]);
      note(tokens[1]);
    } else if (kw == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <src> <dst> <label>'");
      for (std::size_t i = 1; i < 4; ++i)
        if (!is_token(tokens[i]))
          throw ParseError(line_no, "invalid token '" + std::string(tokens[i]) + "'");
      pending.push_back({{std::string(tokens[1]), std::string(tokens[2]), std::string(tokens[3])}, line_no});
      note(tokens[1]);
      note(tokens[2]);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kw) + "'");
    }
  }

  std::set<std::tuple<std::string, std::string, std::string>> triples;
  for (const auto& p : pending) {
    if (!declared.empty()) {
      for (const auto* id : {&p.edge.src, &p.edge.dst})
        if (!declared_at.contains(*id))
          throw ParseError(p.line, "unknown vertex '" + *id + "'");
    }
    if (!triples.emplace(p.edge.src, p.edge.dst, p.edge.label).second)
      throw ParseError(p.line, "duplicate edge " + p.edge.src + " " + p.edge.dst + " " + p.edge.label);
  }

  std::vector<NamedEdge> edges;
  edges.reserve(pending.size());
  for (auto& p : pending) edges.push_back(std::move(p.edge));
  return LabelledGraph(std::move(order), edges);
}

std::string serialize(const LabelledGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.vertex_names()) out << "vertex " << name << "\n";
  for (const Edge& e : g.edges())
    out << "edge " << g.vertex_name(e.src) << " " << g.vertex_name(e.dst) << " "
        << g.label_name(e.label) << "\n";
  return out.str();
}

ValidationReport validate(const LabelledGraph& g) {
  ValidationReport report;
  if (g.vertex_count() == 0)
    report.violations.push_back({Violation::Kind::kEmptyGraph, "graph has no vertices"});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0)
      report.violations.push_back({Violation::Kind::kSink, "vertex '" + g.vertex_name(v) + "' is a sink"});
  }
  const auto& edges = g.edges();
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1] && (i < 2 || edges[i - 2] != edges[i])) {
      const Edge& e = edges[i];
      report.violations.push_back(
          {Violation::Kind::kDuplicateEdge, "duplicate edge " + g.vertex_name(e.src) + " " +
                                                g.vertex_name(e.dst) + " " + g.label_name(e.label)});
    }
  }
  return report;
}

void require_valid(const LabelledGraph& g) {
  if (!g.is_valid()) throw InvalidGraphError("invalid graph: " + g.validation().violations.front().message);
}

VertexSet relative_range(const LabelledGraph& g, const VertexSet& from, const Word& w) {
  VertexSet cur = from;
  for (LabelId a : w) {
    if (cur.empty()) break;
    cur = g.step(cur, a);
  }
  return cur;
}

VertexSet range_of_word(const LabelledGraph& g, const Word& w) {
  if (w.empty()) throw std::invalid_argument("range_of_word: empty word");
  return relative_range(g, g.all_vertices(), w);
}

std::set<Word> in_label_words(const LabelledGraph& g, VertexId v, std::size_t level) {
  // Suffix-first expansion: words ending at v of length k+1 extend those of
  // length k at a predecessor, so we grow reversed words along in-edges.
  std::set<Word> result;
  struct Item {
    VertexId at;
    Word reversed;
  };
  std::vector<Item> frontier{{v, {}}};
  for (std::size_t len = 1; len <= level && !frontier.empty(); ++len) {
    std::set<std::pair<VertexId, Word>> next;
    for (const auto& item : frontier) {
      for (LabelId a = 0; a < g.label_count(); ++a) {
        for (VertexId u : g.predecessors(item.at, a)) {
          Word rw = item.reversed;
          rw.push_back(a);
          next.emplace(u, std::move(rw));
        }
      }
    }
    frontier.clear();
    for (const auto& [u, rw] : next) {
      result.insert(Word(rw.rbegin(), rw.rend()));
      frontier.push_back({u, rw});
    }
  }
  return result;
}

Word parse_word(const LabelledGraph& g, std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string_view part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    auto a = g.find_label(part);
    if (!a) throw Error("unknown label '" + std::string(part) + "'");
    w.push_back(*a);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::string format_word(const LabelledGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += g.label_name(w[i]);
  }
  return out;
}

std::string format_set(const LabelledGraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ',';
    out += g.vertex_name(v);
    first = false;
  });
  return out + "}";
}

VertexSet make_set(const LabelledGraph& g, std::initializer_list<std::string_view> names) {
  VertexSet s = g.empty_set();
  for (auto n : names) {
    auto v = g.find_vertex(n);
    if (!v) throw Error("unknown vertex '" + std::string(n) + "'");
    s.insert(*v);
  }
  return s;
}

VertexSet make_set(const LabelledGraph& g, const std::vector<std::string>& names) {
  VertexSet s = g.empty_set();
  for (const auto& n : names) {
    auto v = g.find_vertex(n);
    if (!v) throw Error("unknown vertex '" + n + "'");
    s.insert(*v);
  }
  return s;
}

}  // namespace lgs
