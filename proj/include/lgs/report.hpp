#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lgs/accommodating.hpp"
#include "lgs/cofinality.hpp"
#include "lgs/disagreeable.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"
#include "lgs/verdict.hpp"
#include "lgs/wlr.hpp"

namespace lgs {

using Json = nlohmann::ordered_json;

enum class Property { kWlr, kCofinal, kStrongCofinal, kDisagreeable, kAccommodating, kOmega };

// Accepts wlr, cofinal, strong-cofinal, disagreeable, accommodating, omega.
std::optional<Property> parse_property(std::string_view name);
std::string_view property_name(Property p);

// Sets as vertex-name lists in internal vertex order.
Json set_json(const LabelledGraph& g, const VertexSet& s);
VertexSet set_from_json(const LabelledGraph& g, const Json& j);
Json graph_json(const LabelledGraph& g);
Json partition_json(const LabelledGraph& g, const Partition& p);

Json wlr_witness_json(const LabelledGraph& g, std::string_view family, const WlrCounterexample& cx);
Json cofinality_witness_json(const LabelledGraph& g, CofinalityKind kind, const CofinalityWitness& w);
Json disagreeable_witness_json(const LabelledGraph& g, VertexId v, std::size_t level, const VertexSet& block);
Json evidence_json(const LabelledGraph& g, const VertexSet& block, const BlockEvidence& ev);

// {graph, verdicts{...}, witnesses[...], citations[...]}
Json analysis_json(const LabelledGraph& g, const SimplicityReport& r);
std::string analysis_text(const LabelledGraph& g, const SimplicityReport& r);

// Partial report for one property, same top-level keys.
Json check_json(const LabelledGraph& g, Property p, const Limits& limits = {});
std::string check_text(const LabelledGraph& g, const Json& report);

struct ReplayOutcome {
  bool verified = false;
  std::string message;
};

// Re-verifies one witness object by direct relative-range computation.
ReplayOutcome replay_witness(const LabelledGraph& g, const Json& witness, const Limits& limits = {});

// Witness objects found in a witness file: a single object, an array, or a
// report with a `witnesses` array.
std::vector<Json> witnesses_in(const Json& doc);

}  // namespace lgs
