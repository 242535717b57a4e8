#include "irrwalk/graph/graph.hpp"

#include <algorithm>

#include "irrwalk/errors.hpp"

namespace irrwalk {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_)
    throw InvalidArgument("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range for " +
                          std::to_string(n_) + " vertices");
  if (a == b) throw InvalidArgument("loop at vertex " + std::to_string(a) + " is not allowed");
  adj_[a * n_ + b] = true;
  adj_[b * n_ + a] = true;
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) m += adjacent(a, b);
  return m;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adjacent(v, u);
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) e.emplace_back(a, b);
  return e;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix A(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (adjacent(a, b)) A(a, b) = 1;
  return A;
}

Graph Graph::delete_vertices(std::vector<std::size_t> removed) const {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n_; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) keep.push_back(v);
  Graph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) g.add_edge(i, j);
  return g;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n_; ++u)
      if (adjacent(v, u) && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n_;
}

bool Graph::bipartite() const {
  std::vector<int> colour(n_, -1);
  for (std::size_t s = 0; s < n_; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n_; ++u) {
        if (!adjacent(v, u)) continue;
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  Graph g(p + q);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < q; ++b) g.add_edge(a, p + b);
  return g;
}

Graph hypercube_graph(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < dim; ++k)
      if (v < (v ^ (std::size_t{1} << k))) g.add_edge(v, v ^ (std::size_t{1} << k));
  return g;
}

}  // namespace irrwalk
