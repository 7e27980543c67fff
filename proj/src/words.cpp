#include "lgs/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgs {

bool has_period(const Word& w, std::size_t p) {
  if (p == 0 || p + 1 > w.size()) return false;
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

bool is_agreeable(const Word& w, std::size_t level) {
  if (w.size() < 2) return false;
  const std::size_t top = std::min(level, w.size() - 1);
  for (std::size_t p = 1; p <= top; ++p)
    if (has_period(w, p)) return true;
  return false;
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
  return primitive_root(w).size() == w.size();
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out(w.size());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(i + k) % n];
  return out;
}

Lasso canonicalize(Lasso x) {
  if (x.cycle.empty()) throw std::invalid_argument("lasso with empty cycle");
  x.cycle = primitive_root(x.cycle);
  // u c . (z' c)^inf == u . (c z')^inf
  while (!x.prefix.empty() && x.prefix.back() == x.cycle.back()) {
    x.prefix.pop_back();
    x.cycle = rotate(x.cycle, x.cycle.size() - 1);
  }
  return x;
}

LabelId lasso_letter(const Lasso& x, std::size_t i) {
  if (i < x.prefix.size()) return x.prefix[i];
  return x.cycle[(i - x.prefix.size()) % x.cycle.size()];
}

std::optional<std::size_t> lasso_least_pure_period(const Lasso& x, std::size_t bound) {
  // Past the prefix the word is |cycle|-periodic, so p-invariance on the
  // first |prefix| + |cycle| positions settles it for every later position.
  const std::size_t window = x.prefix.size() + x.cycle.size();
  for (std::size_t p = 1; p <= bound; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i < window && ok; ++i) ok = lasso_letter(x, i) == lasso_letter(x, i + p);
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace lgs
