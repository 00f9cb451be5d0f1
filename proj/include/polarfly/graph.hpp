#ifndef POLARFLY_GRAPH_HPP
#define POLARFLY_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace polarfly {

inline constexpr int kInfiniteDiameter = -1;

/// Simple undirected graph with sorted neighbor lists. Self-loops are
/// never stored in adjacency; quadric loops live as flags on ErGraph.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit Graph(int n_ = 0) : n(n_), adj(n_) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void finalize();  // sort + dedupe neighbor lists
  std::size_t edge_count() const;

  /// Sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// BFS hop distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Exact diameter via all-pairs BFS; kInfiniteDiameter when disconnected
/// (or n < 2).
int diameter(const Graph& g);

/// Average shortest path over unordered distinct pairs, as an exact
/// rational (sum_of_distances, pair_count). pair_count = 0 signals a
/// disconnected graph.
std::pair<long long, long long> avg_shortest_path_exact(const Graph& g);

double avg_shortest_path(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace polarfly

#endif
