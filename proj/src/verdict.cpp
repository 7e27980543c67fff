#include "lgs/verdict.hpp"

namespace lgs {
namespace {

const Citation kWlrScope{"scope-weakly-left-resolving",
                         "the simplicity criteria apply to labelled spaces (E,L,Ē) that are weakly left-resolving"};
const Citation kSimple{"simple-if-strongly-cofinal-and-disagreeable",
                       "a strongly cofinal and disagreeable (E,L,Ē) has a simple C*-algebra"};
const Citation kStrongCofinal{"simple-implies-strongly-cofinal",
                              "a simple C*(E,L,Ē) forces (E,L,Ē) to be strongly cofinal"};
const Citation kDisagreeable{"simple-implies-disagreeable",
                             "with every {v} in Ē, a simple C*(E,L,Ē) forces (E,L,Ē) to be disagreeable"};
const Citation kCharacterization{"simple-iff-with-singletons",
                                 "with every {v} in Ē, simplicity is equivalent to strong cofinality plus "
                                 "disagreeability"};

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSimple: return "SIMPLE";
    case Verdict::kNotSimple: return "NOT_SIMPLE";
    case Verdict::kUnknown: return "UNKNOWN";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

SimplicityReport simplicity_verdict(const LabelledGraph& g, const Limits& limits) {
  require_valid(g);
  SimplicityReport r;
  r.stable = stable_partition(g, limits);
  r.wlr_bar_e = check_wlr(g, bar_e(r.stable), limits);
  r.singleton = r.stable.limit.is_discrete();
  r.strong_cofinal = check_cofinality(g, CofinalityKind::kStrong, r.stable, limits);
  r.cofinal = check_cofinality(g, CofinalityKind::kPlain, r.stable, limits);
  r.disagreeable = disagreeable_space(g, r.stable, limits);

  const bool strong = r.strong_cofinal.holds;
  const bool disagree = r.disagreeable.space_disagreeable;
  if (!r.wlr_bar_e.holds) {
    r.verdict = Verdict::kNotApplicable;
    r.rule = 0;
    r.citations = {kWlrScope};
  } else if (strong && disagree) {
    r.verdict = Verdict::kSimple;
    r.rule = 1;
    r.citations = {kSimple};
    if (r.singleton) r.citations.push_back(kCharacterization);
  } else if (!strong) {
    r.verdict = Verdict::kNotSimple;
    r.rule = 2;
    r.citations = {kStrongCofinal};
  } else if (r.singleton) {
    r.verdict = Verdict::kNotSimple;
    r.rule = 3;
    r.citations = {kDisagreeable, kCharacterization};
  } else {
    r.verdict = Verdict::kUnknown;
    r.rule = 4;
    r.citations = {kSimple, kStrongCofinal, kDisagreeable};
  }
  return r;
}

}  // namespace lgs
