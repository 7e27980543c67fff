#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace lgs {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

// A subset of the vertex set of one graph, stored as a bitset over the dense
// vertex indices. Equality is extensional; two sets over different universes
// never compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<VertexId>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1u) != 0;
  }
  void insert(VertexId v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(VertexId v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  // Smallest member; undefined on the empty set.
  VertexId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Canonical order: lexicographic on the ascending member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t x = a.words_[i];
      const std::uint64_t y = b.words_[i];
      if (x == y) continue;
      // The lowest differing bit decides: whoever owns it has the smaller
      // member at that position, unless the other list already ended.
      const std::uint64_t diff = x ^ y;
      const std::uint64_t low = diff & (~diff + 1);
      const bool a_has = (x & low) != 0;
      const std::uint64_t below = low - 1;
      // Members above the differing bit (in this and later words) decide
      // whether the list without it continues.
      auto rest_nonempty = [&](const std::vector<std::uint64_t>& ws, std::uint64_t cur) {
        if ((cur & ~below & ~low) != 0) return true;
        for (std::size_t j = i + 1; j < ws.size(); ++j)
          if (ws[j] != 0) return true;
        return false;
      };
      if (a_has) {
        // a has the smaller element here; b continues with something larger
        // or ends. If b ended, b is a proper prefix and smaller.
        return rest_nonempty(b.words_, y) ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
      }
      return rest_nonempty(a.words_, x) ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace lgs
