#include "polarfly/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace polarfly {

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not stored in adjacency");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::finalize() {
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj) total += row.size();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> frontier;
  dist[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.n < 2) return 0;
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d < 0) return kInfiniteDiameter;
      best = std::max(best, d);
    }
  }
  return best;
}

std::pair<long long, long long> avg_shortest_path_exact(const Graph& g) {
  long long sum = 0, pairs = 0;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int t = s + 1; t < g.n; ++t) {
      if (dist[t] < 0) return {0, 0};
      sum += dist[t];
      ++pairs;
    }
  }
  return {sum, pairs};
}

double avg_shortest_path(const Graph& g) {
  auto [sum, pairs] = avg_shortest_path_exact(g);
  if (pairs == 0) return -1.0;
  return static_cast<double>(sum) / static_cast<double>(pairs);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

}  // namespace polarfly
