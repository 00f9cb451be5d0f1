#include "polarfly/traffic.hpp"

#include <algorithm>
#include <numeric>

#include "polarfly/errors.hpp"

namespace polarfly {

int TrafficPattern::destination(int src_router, int n_routers,
                                std::mt19937_64& rng) const {
  if (kind == TrafficKind::Uniform) {
    std::uniform_int_distribution<int> dist(0, n_routers - 2);
    int d = dist(rng);
    if (d >= src_router) ++d;
    return d;
  }
  return mapping[src_router];
}

namespace {

// Kuhn's augmenting-path matching: src i may map to any of allowed[i].
bool try_match(int u, const std::vector<std::vector<int>>& allowed,
               std::vector<int>& match_dst, std::vector<int>& match_src,
               std::vector<char>& visited) {
  for (int v : allowed[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_dst[v] < 0 ||
        try_match(match_dst[v], allowed, match_dst, match_src, visited)) {
      match_dst[v] = u;
      match_src[u] = v;
      return true;
    }
  }
  return false;
}

std::vector<int> constrained_bijection(const std::vector<std::vector<int>>& allowed,
                                       std::mt19937_64& rng) {
  const int n = static_cast<int>(allowed.size());
  auto shuffled = allowed;
  for (auto& row : shuffled) std::shuffle(row.begin(), row.end(), rng);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> match_dst(n, -1), match_src(n, -1);
  for (int u : order) {
    std::vector<char> visited(n, 0);
    if (!try_match(u, shuffled, match_dst, match_src, visited)) return {};
  }
  return match_src;
}

}  // namespace

TrafficPattern make_traffic(TrafficKind kind, const Graph& g, std::uint64_t seed) {
  const int n = g.n;
  TrafficPattern pat;
  pat.kind = kind;
  std::mt19937_64 rng(seed);

  switch (kind) {
    case TrafficKind::Uniform:
      return pat;
    case TrafficKind::Tornado: {
      pat.mapping.resize(n);
      for (int i = 0; i < n; ++i) pat.mapping[i] = (i + n / 2) % n;
      return pat;
    }
    case TrafficKind::RandomPermutation: {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        bool fixed_point = false;
        for (int i = 0; i < n && !fixed_point; ++i) fixed_point = perm[i] == i;
        if (!fixed_point) {
          pat.mapping = perm;
          return pat;
        }
      }
      throw InfeasiblePatternError("could not draw a fixed-point-free permutation");
    }
    case TrafficKind::Perm1Hop:
    case TrafficKind::Perm2Hop: {
      std::vector<std::vector<int>> allowed(n);
      for (int v = 0; v < n; ++v) {
        if (kind == TrafficKind::Perm1Hop) {
          allowed[v] = g.adj[v];
        } else {
          auto dist = bfs_distances(g, v);
          for (int u = 0; u < n; ++u)
            if (dist[u] == 2) allowed[v].push_back(u);
        }
      }
      for (int attempt = 0; attempt < 50; ++attempt) {
        auto perm = constrained_bijection(allowed, rng);
        if (!perm.empty()) {
          pat.mapping = perm;
          return pat;
        }
      }
      throw InfeasiblePatternError("no feasible hop-constrained permutation");
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace polarfly
