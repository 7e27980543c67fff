#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lgs/graph.hpp"
#include "lgs/oracle/oracle.hpp"

namespace lgs::test {

inline std::string fixture_path(const std::string& name) { return std::string(LGS_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline LabelledGraph fixture(const std::string& name) { return parse_graph(read_text(fixture_path(name + ".lg"))); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"range_vertex", "six_cycle", "single_loop", "disjoint_loops", "plateau"};
  return names;
}

// Two-vertex alternating cycle x -a-> y -b-> x.
inline LabelledGraph alternating_cycle() { return LabelledGraph::from_edges({{"x", "y", "a"}, {"y", "x", "b"}}); }

inline std::vector<LabelledGraph> random_graphs(std::uint64_t seed, std::size_t n, std::size_t max_vertices = 6) {
  std::mt19937_64 rng(seed);
  std::vector<LabelledGraph> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(oracle::random_graph(rng, max_vertices));
  return out;
}

}  // namespace lgs::test
