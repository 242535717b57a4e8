#pragma once

#include <string>
#include <string_view>

#include "irrwalk/graph/graph.hpp"

namespace irrwalk {

enum class GraphFormat { edgelist, graph6 };

GraphFormat parse_graph_format(std::string_view name);

// Edge list: one "u v" pair per line, 0-indexed; blank lines and '#' comments are
// skipped; duplicate edges and self-loops are rejected; n is the largest index plus one.
// graph6: the standard printable encoding, optionally preceded by the ">>graph6<<" header.
Graph parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edgelist(const Graph& g);

}  // namespace irrwalk
