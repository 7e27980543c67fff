#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgs/accommodating.hpp"
#include "lgs/cofinality.hpp"
#include "lgs/disagreeable.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"
#include "lgs/wlr.hpp"

namespace lgs {

enum class Verdict { kSimple, kNotSimple, kUnknown, kNotApplicable };

std::string_view verdict_name(Verdict v);

struct Citation {
  std::string tag;
  std::string statement;
};

struct SimplicityReport {
  StablePartition stable;
  WlrVerdict wlr_bar_e;
  bool singleton = false;
  CofinalityVerdict strong_cofinal;
  CofinalityVerdict cofinal;
  DisagreeableVerdict disagreeable;
  Verdict verdict = Verdict::kUnknown;
  int rule = 4;
  std::vector<Citation> citations;
};

// Rules, first match wins:
//   0  Ē not weakly left-resolving        -> NOT_APPLICABLE
//   1  strongly cofinal and disagreeable  -> SIMPLE
//   2  not strongly cofinal               -> NOT_SIMPLE
//   3  singletons in Ē, not disagreeable  -> NOT_SIMPLE
//   4  otherwise                          -> UNKNOWN
// The checkers after rule 0 still run so the report is complete.
SimplicityReport simplicity_verdict(const LabelledGraph& g, const Limits& limits = {});

}  // namespace lgs
