#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rwg {

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Rejects self-loops and out-of-range endpoints; a repeated edge is a no-op
  // and returns false.
  bool add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  // Sorted neighbour list.
  const std::vector<std::size_t>& neighbours(std::size_t v) const {
    return adj_[v];
  }
  // Edges as (u, v) pairs with u < v, lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  std::size_t component_count() const;
  // e - v + c
  std::size_t cycle_rank() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edges_ = 0;
};

// Proper 2-colouring by BFS, or nullopt if an odd cycle exists.
std::optional<std::vector<int>> two_colouring(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

// Distinct 4-vertex subsets whose vertices can be arranged in a closed walk
// a-b-c-d-a. Found through pairs of opposite corners sharing two neighbours.
std::size_t count_four_cycles(const SimpleGraph& g);

// Backtracking isomorphism test with colour-refinement pruning. Throws
// ResourceError when either graph has more than `max_vertices` vertices.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                    std::size_t max_vertices);

// Small named graphs used across tests and reports.
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);

}  // namespace rwg
