#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "irrwalk/algebra/matrix.hpp"

namespace irrwalk {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {}
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * n_ + b]; }
  // Rejects loops and out-of-range endpoints; repeated edges are idempotent.
  void add_edge(std::size_t a, std::size_t b);

  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  IntMatrix adjacency_matrix() const;
  // Induced subgraph on the remaining vertices, relabelled in increasing order.
  Graph delete_vertices(std::vector<std::size_t> removed) const;
  bool connected() const;
  bool bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph hypercube_graph(std::size_t dim);

}  // namespace irrwalk
