#pragma once

#include <cstddef>
#include <optional>

#include "lgs/graph.hpp"

namespace lgs {

// Eventually periodic infinite word prefix . cycle^inf.
struct Lasso {
  Word prefix;
  Word cycle;  // nonempty

  friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

// w[i] == w[i+p] for every valid i, with 1 <= p <= |w|-1 so the overlap is a
// nonempty word.
bool has_period(const Word& w, std::size_t p);

// Some period p with 1 <= p <= min(level, |w|-1). Single letters are never
// agreeable.
bool is_agreeable(const Word& w, std::size_t level);

// Not a proper power. Requires |w| >= 1.
bool is_primitive(const Word& w);

// Shortest u with w == u^k.
Word primitive_root(const Word& w);

// Cyclic left rotation by k (mod |w|).
Word rotate(const Word& w, std::size_t k);

// Cycle reduced to its primitive root and the prefix rolled into the cycle as
// far as it goes.
Lasso canonicalize(Lasso x);

// Letter at 0-based position i of prefix . cycle^inf.
LabelId lasso_letter(const Lasso& x, std::size_t i);

// Smallest p <= bound with x(i) == x(i+p) for all i, i.e. x == (x[0..p))^inf.
std::optional<std::size_t> lasso_least_pure_period(const Lasso& x, std::size_t bound);

}  // namespace lgs
