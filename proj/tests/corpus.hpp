#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "irrwalk/cli/graph_io.hpp"

namespace irrwalk::testing {

inline std::string data_path(const std::string& name) { return std::string(IRRWALK_TEST_DATA_DIR) + "/" + name; }

struct CorpusGraph {
  std::string graph6;
  Graph graph;
};

inline std::vector<CorpusGraph> load_corpus() {
  std::ifstream in(data_path("corpus.g6"));
  std::vector<CorpusGraph> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back({line, parse_graph(line, GraphFormat::graph6)});
  return out;
}

inline std::vector<std::vector<int>> to_int_rows(const Graph& g) {
  std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) a[i][j] = g.adjacent(i, j);
  return a;
}

// K4 minus the edge {0, 1}: vertices 0, 1 have degree 2 and 2, 3 have degree 3.
inline Graph k4_minus_edge() { return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace irrwalk::testing
