#include "lgs/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lgs/error.hpp"
#include "lgs/wlr.hpp"

namespace lgs {

void LinComb::add(const Term& t, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

Algebra::Algebra(const LabelledGraph& g, SetFamily family, const Limits& limits)
    : g_(&g), family_(std::move(family)) {
  require_valid(g);
  if (!is_accommodating(g, family_)) throw FamilyError("working family is not accommodating");
  const auto wlr = check_wlr(g, family_, limits);
  if (!wlr.holds)
    throw FamilyError("working family is not weakly left-resolving: " + format_set(g, wlr.counterexample->a) +
                      ", " + format_set(g, wlr.counterexample->b) + ", " +
                      format_word(g, wlr.counterexample->word));
}

Algebra Algebra::smallest(const LabelledGraph& g, const Limits& limits) {
  return Algebra(g, smallest_accommodating(g, limits), limits);
}

Algebra Algebra::bar(const LabelledGraph& g, const Limits& limits) { return Algebra(g, bar_e(g, limits), limits); }

std::optional<Term> Algebra::canonicalize(const Term& t) const {
  VertexSet a = t.a;
  if (!t.alpha.empty()) a &= range_of_word(*g_, t.alpha);
  if (!t.beta.empty()) a &= range_of_word(*g_, t.beta);
  if (a.empty()) return std::nullopt;
  if (!family_.contains(a)) throw FamilyError("set " + format_set(*g_, a) + " is outside the working family");
  return Term{t.alpha, std::move(a), t.beta};
}

LinComb Algebra::term(const Word& alpha, const VertexSet& a, const Word& beta, const Rational& c) const {
  LinComb out;
  if (auto t = canonicalize({alpha, a, beta})) out.add(*t, c);
  return out;
}

LinComb Algebra::s(const Word& w) const { return term(w, g_->all_vertices(), {}); }

LinComb Algebra::s_star(const Word& w) const { return term({}, g_->all_vertices(), w); }

LinComb Algebra::multiply(const Term& x, const Term& y) const {
  // (s_α p_A s_β^*)(s_γ p_B s_δ^*)
  const Word& beta = x.beta;
  const Word& gamma = y.alpha;
  const std::size_t common = std::min(beta.size(), gamma.size());
  if (!std::equal(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(common), gamma.begin()))
    return {};
  if (gamma.size() >= beta.size()) {
    // γ = βγ': p_A s_γ' = s_γ' p_{r(A,γ')}.
    const Word rest(gamma.begin() + static_cast<std::ptrdiff_t>(common), gamma.end());
    Word alpha = x.alpha;
    alpha.insert(alpha.end(), rest.begin(), rest.end());
    return term(alpha, relative_range(*g_, x.a, rest) & y.a, y.beta);
  }
  // β = γβ': s_β'^* p_B = p_{r(B,β')} s_β'^*.
  const Word rest(beta.begin() + static_cast<std::ptrdiff_t>(common), beta.end());
  Word delta = y.beta;
  delta.insert(delta.end(), rest.begin(), rest.end());
  return term(x.alpha, x.a & relative_range(*g_, y.a, rest), delta);
}

LinComb Algebra::multiply(const LinComb& x, const LinComb& y) const {
  LinComb out;
  for (const auto& [s, c] : x.terms())
    for (const auto& [t, d] : y.terms()) {
      const Rational cd = c * d;
      const LinComb st = multiply(s, t);
      for (const auto& [u, e] : st.terms()) out.add(u, cd * e);
    }
  return out;
}

LinComb Algebra::expand(const VertexSet& a, std::size_t n) const {
  LinComb out;
  if (a.empty()) return out;
  return expand_terms(p(a), n);
}

LinComb Algebra::adjoint(const LinComb& x) {
  LinComb out;
  for (const auto& [t, c] : x.terms()) out.add(Term{t.beta, t.a, t.alpha}, c);
  return out;
}

LinComb Algebra::expand_terms(const LinComb& x, std::size_t depth) const {
  LinComb out;
  std::vector<std::pair<Term, Rational>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [t, c] = std::move(work.back());
    work.pop_back();
    if (std::min(t.alpha.size(), t.beta.size()) >= depth) {
      out.add(t, c);
      continue;
    }
    for (LabelId a = 0; a < g_->label_count(); ++a) {
      VertexSet r = g_->step(t.a, a);
      if (r.empty()) continue;
      Term u{t.alpha, std::move(r), t.beta};
      u.alpha.push_back(a);
      u.beta.push_back(a);
      work.emplace_back(std::move(u), c);
    }
  }
  return out;
}

bool Algebra::equivalent(const LinComb& x, const LinComb& y) const {
  const LinComb diff = x - y;
  if (diff.is_zero()) return true;
  std::size_t depth = 0;
  for (const auto& [t, c] : diff.terms()) depth = std::max(depth, std::min(t.alpha.size(), t.beta.size()));
  const LinComb flat = expand_terms(diff, depth);
  std::map<std::pair<Word, Word>, std::vector<Rational>> weights;
  for (const auto& [t, c] : flat.terms()) {
    auto& w = weights[{t.alpha, t.beta}];
    w.resize(g_->vertex_count());
    t.a.for_each([&](VertexId v) { w[v] += c; });
  }
  for (const auto& [key, w] : weights)
    if (std::any_of(w.begin(), w.end(), [](const Rational& c) { return c != 0; })) return false;
  return true;
}

std::string format_rational(const Rational& c) {
  std::ostringstream out;
  out << c;
  return out.str();
}

std::string format_term(const LabelledGraph& g, const Term& t) {
  std::string out;
  if (!t.alpha.empty()) out += "s[" + format_word(g, t.alpha) + "] ";
  out += "p" + format_set(g, t.a);
  if (!t.beta.empty()) out += " s*[" + format_word(g, t.beta) + "]";
  return out;
}

std::string format_lincomb(const LabelledGraph& g, const LinComb& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += format_rational(mag) + " ";
    out += format_term(g, t);
  }
  return out;
}

}  // namespace lgs
