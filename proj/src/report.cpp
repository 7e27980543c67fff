#include "lgs/report.hpp"

#include <sstream>

#include "lgs/error.hpp"

namespace lgs {
namespace {

std::string wlr_kind_name(std::string_view family) { return "wlr:" + std::string(family); }

Json wlr_verdict_json(const LabelledGraph& g, const WlrVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.counterexample) {
    j["a"] = set_json(g, v.counterexample->a);
    j["b"] = set_json(g, v.counterexample->b);
    j["word"] = format_word(g, v.counterexample->word);
  }
  return j;
}

Json cofinality_verdict_json(const LabelledGraph& g, const CofinalityVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.witness) {
    j["w"] = g.vertex_name(v.witness->w);
    j["block"] = set_json(g, v.witness->target_block);
  }
  return j;
}

Json disagreeable_verdict_json(const LabelledGraph& g, const DisagreeableVerdict& v) {
  Json j{{"holds", v.space_disagreeable}};
  if (v.failure) {
    j["v"] = g.vertex_name(v.failure->first);
    j["level"] = v.failure->second;
  }
  Json evidence = Json::array();
  for (const auto& [block, ev] : v.evidence) evidence.push_back(evidence_json(g, block, ev));
  j["evidence"] = std::move(evidence);
  return j;
}

Json citations_json(const std::vector<Citation>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"tag", c.tag}, {"statement", c.statement}});
  return out;
}

Json empty_report(const LabelledGraph& g) {
  return Json{{"graph", graph_json(g)}, {"verdicts", Json::object()}, {"witnesses", Json::array()},
              {"citations", Json::array()}};
}

std::string text_of_set_list(const Json& j) {
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + j[i].get<std::string>();
  return out + "}";
}

std::string witness_line(const Json& w) {
  const std::string kind = w.at("kind");
  if (kind.starts_with("wlr:"))
    return kind + " A=" + text_of_set_list(w.at("a")) + " B=" + text_of_set_list(w.at("b")) + " word=" +
           w.at("word").get<std::string>();
  if (kind == "cofinal" || kind == "strong-cofinal")
    return kind + " w=" + w.at("w").get<std::string>() + " source=" + text_of_set_list(w.at("source")) +
           " block=" + text_of_set_list(w.at("block")) + " lasso=(" + w.at("prefix").get<std::string>() + ", " +
           w.at("cycle").get<std::string>() + ")";
  if (kind == "disagreeable")
    return kind + " v=" + w.at("v").get<std::string>() + " level=" + std::to_string(w.at("level").get<int>()) +
           " block=" + text_of_set_list(w.at("block"));
  return w.dump();
}

}  // namespace

std::optional<Property> parse_property(std::string_view name) {
  if (name == "wlr") return Property::kWlr;
  if (name == "cofinal") return Property::kCofinal;
  if (name == "strong-cofinal") return Property::kStrongCofinal;
  if (name == "disagreeable") return Property::kDisagreeable;
  if (name == "accommodating") return Property::kAccommodating;
  if (name == "omega") return Property::kOmega;
  return std::nullopt;
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::kWlr: return "wlr";
    case Property::kCofinal: return "cofinal";
    case Property::kStrongCofinal: return "strong-cofinal";
    case Property::kDisagreeable: return "disagreeable";
    case Property::kAccommodating: return "accommodating";
    case Property::kOmega: return "omega";
  }
  return "";
}

Json set_json(const LabelledGraph& g, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(g.vertex_name(v)); });
  return out;
}

VertexSet set_from_json(const LabelledGraph& g, const Json& j) {
  if (!j.is_array()) throw Error("expected a list of vertex names");
  std::vector<std::string> names;
  for (const auto& x : j) names.push_back(x.get<std::string>());
  return make_set(g, names);
}

Json graph_json(const LabelledGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({g.vertex_name(e.src), g.vertex_name(e.dst), g.label_name(e.label)});
  return {{"vertices", g.vertex_names()}, {"labels", g.label_names()}, {"edges", std::move(edges)}};
}

Json partition_json(const LabelledGraph& g, const Partition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks) out.push_back(set_json(g, b));
  return out;
}

Json wlr_witness_json(const LabelledGraph& g, std::string_view family, const WlrCounterexample& cx) {
  return {{"kind", wlr_kind_name(family)},
          {"a", set_json(g, cx.a)},
          {"b", set_json(g, cx.b)},
          {"word", format_word(g, cx.word)}};
}

Json cofinality_witness_json(const LabelledGraph& g, CofinalityKind kind, const CofinalityWitness& w) {
  return {{"kind", kind == CofinalityKind::kStrong ? "strong-cofinal" : "cofinal"},
          {"w", g.vertex_name(w.w)},
          {"source", set_json(g, w.source)},
          {"block", set_json(g, w.target_block)},
          {"prefix", format_word(g, w.x.prefix)},
          {"cycle", format_word(g, w.x.cycle)},
          {"note", w.x.annotation}};
}

Json disagreeable_witness_json(const LabelledGraph& g, VertexId v, std::size_t level, const VertexSet& block) {
  return {{"kind", "disagreeable"}, {"v", g.vertex_name(v)}, {"level", level}, {"block", set_json(g, block)}};
}

Json evidence_json(const LabelledGraph& g, const VertexSet& block, const BlockEvidence& ev) {
  Json j{{"block", set_json(g, block)}};
  if (ev.kind == BlockEvidence::Kind::kInfinite) {
    j["sequences"] = "infinite";
    return j;
  }
  Json lassos = Json::array();
  for (const auto& x : ev.lassos) {
    Json l{{"prefix", format_word(g, x.prefix)}, {"cycle", format_word(g, x.cycle)}};
    const auto p = lasso_least_pure_period(x, x.prefix.size() + x.cycle.size());
    l["least_pure_period"] = p ? Json(*p) : Json(nullptr);
    lassos.push_back(std::move(l));
  }
  j["sequences"] = std::move(lassos);
  return j;
}

Json analysis_json(const LabelledGraph& g, const SimplicityReport& r) {
  Json out = empty_report(g);
  Json& v = out["verdicts"];
  v["verdict"] = verdict_name(r.verdict);
  v["rule"] = r.rule;
  v["wlr_bar_e"] = wlr_verdict_json(g, r.wlr_bar_e);
  v["singleton"] = r.singleton;
  v["strong_cofinal"] = cofinality_verdict_json(g, r.strong_cofinal);
  v["cofinal"] = cofinality_verdict_json(g, r.cofinal);
  v["disagreeable"] = disagreeable_verdict_json(g, r.disagreeable);
  v["stable_level"] = r.stable.level;
  v["omega_infinity"] = partition_json(g, r.stable.limit);

  Json& w = out["witnesses"];
  if (r.wlr_bar_e.counterexample) w.push_back(wlr_witness_json(g, "bar_e", *r.wlr_bar_e.counterexample));
  if (r.strong_cofinal.witness)
    w.push_back(cofinality_witness_json(g, CofinalityKind::kStrong, *r.strong_cofinal.witness));
  if (r.cofinal.witness) w.push_back(cofinality_witness_json(g, CofinalityKind::kPlain, *r.cofinal.witness));
  if (r.disagreeable.failure) {
    const auto [vertex, level] = *r.disagreeable.failure;
    const VertexSet block = level >= r.stable.level ? r.stable.limit.block_of(vertex)
                                                    : omega(g, level).block_of(vertex);
    w.push_back(disagreeable_witness_json(g, vertex, level, block));
  }
  out["citations"] = citations_json(r.citations);
  return out;
}

std::string analysis_text(const LabelledGraph& g, const SimplicityReport& r) {
  std::ostringstream out;
  out << "graph: " << g.vertex_count() << " vertices, " << g.label_count() << " labels, " << g.edges().size()
      << " edges\n";
  out << "omega_infinity: ";
  for (const auto& b : r.stable.limit.blocks) out << format_set(g, b) << " ";
  out << "(stable from level " << r.stable.level << ")\n";
  out << "wlr(bar E): " << (r.wlr_bar_e.holds ? "holds" : "fails") << "\n";
  out << "singletons in bar E: " << (r.singleton ? "yes" : "no") << "\n";
  out << "strongly cofinal: " << (r.strong_cofinal.holds ? "yes" : "no") << "\n";
  out << "cofinal: " << (r.cofinal.holds ? "yes" : "no") << "\n";
  out << "disagreeable: " << (r.disagreeable.space_disagreeable ? "yes" : "no") << "\n";
  out << "verdict: " << verdict_name(r.verdict) << " (rule " << r.rule << ")\n";
  const Json j = analysis_json(g, r);
  for (const auto& w : j["witnesses"]) out << "witness: " << witness_line(w) << "\n";
  for (const auto& c : r.citations) out << "cite: " << c.tag << ": " << c.statement << "\n";
  return out.str();
}

Json check_json(const LabelledGraph& g, Property p, const Limits& limits) {
  require_valid(g);
  Json out = empty_report(g);
  Json& v = out["verdicts"];
  Json& w = out["witnesses"];
  switch (p) {
    case Property::kWlr: {
      const auto bar = check_wlr(g, bar_e(g, limits), limits);
      const auto small = check_wlr(g, smallest_accommodating(g, limits), limits);
      v["wlr_bar_e"] = wlr_verdict_json(g, bar);
      v["wlr_smallest"] = wlr_verdict_json(g, small);
      if (bar.counterexample) w.push_back(wlr_witness_json(g, "bar_e", *bar.counterexample));
      if (small.counterexample) w.push_back(wlr_witness_json(g, "smallest", *small.counterexample));
      break;
    }
    case Property::kCofinal:
    case Property::kStrongCofinal: {
      const auto kind = p == Property::kStrongCofinal ? CofinalityKind::kStrong : CofinalityKind::kPlain;
      const auto r = check_cofinality(g, kind, stable_partition(g, limits), limits);
      v[p == Property::kStrongCofinal ? "strong_cofinal" : "cofinal"] = cofinality_verdict_json(g, r);
      if (r.witness) w.push_back(cofinality_witness_json(g, kind, *r.witness));
      break;
    }
    case Property::kDisagreeable: {
      const auto stable = stable_partition(g, limits);
      const auto r = disagreeable_space(g, stable, limits);
      v["disagreeable"] = disagreeable_verdict_json(g, r);
      if (r.failure) {
        const auto [vertex, level] = *r.failure;
        const VertexSet block = level >= stable.level ? stable.limit.block_of(vertex)
                                                      : omega(g, level, limits).block_of(vertex);
        w.push_back(disagreeable_witness_json(g, vertex, level, block));
      }
      break;
    }
    case Property::kAccommodating: {
      const auto fam = smallest_accommodating(g, limits);
      Json members = Json::array();
      for (const auto& s : fam.members()) members.push_back(set_json(g, s));
      const auto bar = bar_e(g, limits);
      v["smallest"] = {{"size", fam.size()}, {"members", std::move(members)}};
      v["bar_e"] = {{"blocks", partition_json(g, Partition{0, std::vector<VertexSet>(bar.blocks().begin(), bar.blocks().end())})},
                    {"accommodating", is_accommodating(g, bar)}};
      break;
    }
    case Property::kOmega: {
      const auto stable = stable_partition(g, limits);
      Json levels = Json::array();
      for (std::size_t l = 1; l <= stable.level; ++l)
        levels.push_back({{"level", l}, {"blocks", partition_json(g, omega(g, l, limits))}});
      v["omega"] = {{"levels", std::move(levels)},
                    {"stable_level", stable.level},
                    {"limit", partition_json(g, stable.limit)},
                    {"singleton", stable.limit.is_discrete()}};
      break;
    }
  }
  return out;
}

std::string check_text(const LabelledGraph&, const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report["verdicts"].items()) out << key << ": " << value.dump() << "\n";
  for (const auto& w : report["witnesses"]) out << "witness: " << witness_line(w) << "\n";
  return out.str();
}

std::vector<Json> witnesses_in(const Json& doc) {
  if (doc.is_object() && doc.contains("witnesses")) return witnesses_in(doc["witnesses"]);
  if (doc.is_array()) return std::vector<Json>(doc.begin(), doc.end());
  if (doc.is_object() && doc.contains("kind")) return {doc};
  throw Error("witness file holds no witness objects");
}

ReplayOutcome replay_witness(const LabelledGraph& g, const Json& w, const Limits& limits) {
  require_valid(g);
  const std::string kind = w.at("kind");
  if (kind.starts_with("wlr:")) {
    const VertexSet a = set_from_json(g, w.at("a"));
    const VertexSet b = set_from_json(g, w.at("b"));
    const Word word = parse_word(g, w.at("word").get<std::string>());
    const VertexSet lhs = relative_range(g, a & b, word);
    const VertexSet rhs = relative_range(g, a, word) & relative_range(g, b, word);
    if (word.empty() || lhs == rhs) return {false, "identity holds for this pair and word"};
    const std::string family = kind.substr(4);
    const SetFamily fam = family == "bar_e" ? bar_e(g, limits) : smallest_accommodating(g, limits);
    if (!fam.contains(a) || !fam.contains(b)) return {false, "sets are not members of the " + family + " family"};
    return {true, "r(A∩B, w) = " + format_set(g, lhs) + " but r(A,w) ∩ r(B,w) = " + format_set(g, rhs)};
  }
  if (kind == "cofinal" || kind == "strong-cofinal") {
    CofinalityWitness cw;
    const auto v = g.find_vertex(w.at("w").get<std::string>());
    if (!v) return {false, "unknown vertex"};
    cw.w = *v;
    cw.source = set_from_json(g, w.at("source"));
    cw.target_block = set_from_json(g, w.at("block"));
    cw.x.prefix = parse_word(g, w.at("prefix").get<std::string>());
    cw.x.cycle = parse_word(g, w.at("cycle").get<std::string>());
    const auto stable = stable_partition(g, limits);
    const VertexSet expected = kind == "strong-cofinal" ? omega(g, 1, limits).block_of(cw.w) : stable.limit.block_of(cw.w);
    if (cw.source != expected) return {false, "source is not the generalized vertex of w"};
    if (std::find(stable.limit.blocks.begin(), stable.limit.blocks.end(), cw.target_block) == stable.limit.blocks.end())
      return {false, "target is not a generalized vertex"};
    if (!replay_cofinality_witness(g, cw)) return {false, "lasso is covered or not realizable from w"};
    return {true, "range from the source stays outside U(target) through |prefix| + 3|cycle| steps"};
  }
  if (kind == "disagreeable") {
    const auto v = g.find_vertex(w.at("v").get<std::string>());
    if (!v) return {false, "unknown vertex"};
    const std::size_t level = w.at("level").get<std::size_t>();
    const VertexSet block = set_from_json(g, w.at("block"));
    if (level == 0 || omega(g, level, limits).block_of(*v) != block) return {false, "block is not [v]_l"};
    if (non_agreeable_word(g, block, level, limits.max_states))
      return {false, "a word without period <= l exists"};
    return {true, "every word of length > l from the block has a period <= l"};
  }
  return {false, "unknown witness kind '" + kind + "'"};
}

}  // namespace lgs
