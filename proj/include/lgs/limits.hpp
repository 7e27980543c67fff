#pragma once

#include <cstddef>

namespace lgs {

// Caps on explicit-state exploration. Exceeding one raises ResourceError;
// nothing is ever silently truncated.
struct Limits {
  std::size_t max_states = std::size_t{1} << 20;  // --cap-states
  std::size_t max_family = 10'000;                // --cap-family
  std::size_t max_pairs = 1'000'000;              // --cap-pairs
};

}  // namespace lgs
