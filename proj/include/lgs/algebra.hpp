#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <tuple>

#include "lgs/accommodating.hpp"
#include "lgs/graph.hpp"
#include "lgs/limits.hpp"

namespace lgs {

using Rational = boost::multiprecision::cpp_rational;

// s_alpha p_A s_beta^*; an empty word stands for no partial isometry.
struct Term {
  Word alpha;
  VertexSet a;
  Word beta;

  friend auto operator<=>(const Term&, const Term&) = default;
};

// Finite linear combination of terms with exact coefficients. Keys are
// canonical and coefficients nonzero.
class LinComb {
 public:
  using Map = std::map<Term, Rational>;

  LinComb() = default;

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Adds c * t; `t` must already be canonical and nonzero.
  void add(const Term& t, const Rational& c);
  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Rational& c);
  friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
  friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
  friend LinComb operator*(const Rational& c, LinComb x) { return x *= c; }

  // Structural equality of the stored terms.
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

// Relation calculus for a labelled space (g, family). The family must be
// weakly left-resolving and accommodating; other families are refused with
// FamilyError.
class Algebra {
 public:
  Algebra(const LabelledGraph& g, SetFamily family, const Limits& limits = {});

  // Over E^{0,-} and over Ē respectively.
  static Algebra smallest(const LabelledGraph& g, const Limits& limits = {});
  static Algebra bar(const LabelledGraph& g, const Limits& limits = {});

  const LabelledGraph& graph() const { return *g_; }
  const SetFamily& family() const { return family_; }

  // A ∩ r(alpha) ∩ r(beta) with r(ε) = E^0; nullopt when empty.
  std::optional<Term> canonicalize(const Term& t) const;

  // Single-term combinations. `term` canonicalizes its argument.
  LinComb term(const Word& alpha, const VertexSet& a, const Word& beta, const Rational& c = 1) const;
  LinComb p(const VertexSet& a) const { return term({}, a, {}); }
  // s_w = s_w p_{r(w)} and its adjoint.
  LinComb s(const Word& w) const;
  LinComb s_star(const Word& w) const;

  LinComb multiply(const Term& x, const Term& y) const;
  LinComb multiply(const LinComb& x, const LinComb& y) const;

  // Σ over words σ of length n readable from A of s_σ p_{r(A,σ)} s_σ^*.
  LinComb expand(const VertexSet& a, std::size_t n) const;

  static LinComb adjoint(const LinComb& x);

  // Rewrites every term s_α p_A s_β^* as Σ_a s_{αa} p_{r(A,a)} s_{βa}^*
  // until min(|α|, |β|) >= depth.
  LinComb expand_terms(const LinComb& x, std::size_t depth) const;

  // x == y in the algebra, decided by expanding both sides until every term
  // has min(|α|,|β|) equal to a common depth and comparing, per (α, β), the
  // vertex-wise sums of coefficients over the projections. Equal normal forms
  // imply equal elements: within one (α, β) the projections combine through
  // p_{A∪B} = p_A + p_B - p_{A∩B}.
  bool equivalent(const LinComb& x, const LinComb& y) const;

 private:
  const LabelledGraph* g_;
  SetFamily family_;
};

std::string format_rational(const Rational& c);
std::string format_term(const LabelledGraph& g, const Term& t);
std::string format_lincomb(const LabelledGraph& g, const LinComb& x);

}  // namespace lgs
