#include "polarfly/routing.hpp"

#include <algorithm>

namespace polarfly {

Route min_route(const ErGraph& er, int s, int t) {
  if (s == t) throw SameVertexError();
  Route r;
  r.policy = RoutePolicy::Min;
  if (er.g.has_edge(s, t)) {
    r.hops = {s, t};
    return r;
  }
  ProjectivePoint mid = cross(er.field, er.points[s], er.points[t]);
  r.hops = {s, er.vertex_of(mid), t};
  return r;
}

namespace {

// Removes any cycle introduced by gluing two minimal legs together.
void make_simple(std::vector<int>& hops) {
  for (size_t i = 0; i < hops.size(); ++i) {
    for (size_t j = hops.size(); j-- > i + 1;) {
      if (hops[j] == hops[i]) {
        hops.erase(hops.begin() + static_cast<long>(i) + 1,
                   hops.begin() + static_cast<long>(j) + 1);
        break;
      }
    }
  }
}

}  // namespace

Route valiant_route(const ErGraph& er, int s, int t, Rng& rng) {
  if (s == t) throw SameVertexError();
  const int n = er.n();
  std::uniform_int_distribution<int> dist(0, n - 3);
  int pick = dist(rng);
  // map [0, n-3] onto vertex IDs skipping s and t
  int lo = std::min(s, t), hi = std::max(s, t);
  if (pick >= lo) ++pick;
  if (pick >= hi) ++pick;
  int r = pick;

  Route leg1 = min_route(er, s, r);
  Route leg2 = min_route(er, r, t);
  Route out;
  out.policy = RoutePolicy::Valiant;
  out.hops = leg1.hops;
  out.hops.insert(out.hops.end(), leg2.hops.begin() + 1, leg2.hops.end());
  make_simple(out.hops);
  return out;
}

Route compact_valiant_route(const ErGraph& er, int s, int t, Rng& rng) {
  if (s == t) throw SameVertexError();
  if (er.g.has_edge(s, t)) throw AdjacentEndpointsError();

  // candidate intermediates: neighbors of s whose min path to t does not
  // pass back through s
  std::vector<int> candidates;
  for (int r : er.g.adj[s]) {
    if (r == t) continue;
    Route back = min_route(er, r, t);
    if (back.hops.size() == 3 && back.hops[1] == s) continue;
    candidates.push_back(r);
  }
  if (candidates.empty())
    throw std::logic_error("no compact valiant intermediate available");
  std::uniform_int_distribution<size_t> dist(0, candidates.size() - 1);
  int r = candidates[dist(rng)];

  Route out;
  out.policy = RoutePolicy::CompactValiant;
  out.hops = {s, r};
  Route leg2 = min_route(er, r, t);
  out.hops.insert(out.hops.end(), leg2.hops.begin() + 1, leg2.hops.end());
  make_simple(out.hops);
  return out;
}

UgalChoice ugal_decide(int min_queue, int min_len, int val_queue, int val_len,
                       UgalVariant variant, int buffer_capacity) {
  if (variant == UgalVariant::UgalPF) {
    // adaptation threshold: detour only past 2/3 occupancy of the
    // minimal-path output buffer
    return 3 * min_queue > 2 * buffer_capacity ? UgalChoice::Valiant
                                               : UgalChoice::Min;
  }
  long long min_cost = static_cast<long long>(min_queue) * min_len;
  long long val_cost = static_cast<long long>(val_queue) * val_len;
  return min_cost <= val_cost ? UgalChoice::Min : UgalChoice::Valiant;
}

namespace {

long long dfs_paths(const Graph& g, int cur, int t, int remaining,
                    std::vector<char>& used) {
  if (remaining == 0) return cur == t ? 1 : 0;
  long long total = 0;
  for (int w : g.adj[cur]) {
    if (used[w]) continue;
    if (w == t && remaining > 1) continue;
    used[w] = 1;
    total += dfs_paths(g, w, t, remaining - 1, used);
    used[w] = 0;
  }
  return total;
}

}  // namespace

long long count_paths(const Graph& g, int s, int t, int length) {
  if (s == t) throw SameVertexError();
  if (length < 1 || length > 4) throw LengthOutOfRangeError(length);
  std::vector<char> used(g.n, 0);
  used[s] = 1;
  return dfs_paths(g, s, t, length, used);
}

long long expected_path_count(const ErGraph& er, int s, int t, int length) {
  if (s == t) throw SameVertexError();
  if (length < 1 || length > 4) throw LengthOutOfRangeError(length);
  const long long q = er.q;
  const bool adjacent = er.g.has_edge(s, t);
  const bool sq = er.cls[s] == VClass::W;
  const bool tq = er.cls[t] == VClass::W;
  const int quadric_endpoints = (sq ? 1 : 0) + (tq ? 1 : 0);

  switch (length) {
    case 1:
      return adjacent ? 1 : 0;
    case 2:
      if (adjacent && quadric_endpoints >= 1) return 0;
      return 1;
    case 3: {
      if (adjacent) return 0;
      ProjectivePoint mid = cross(er.field, er.points[s], er.points[t]);
      bool mid_quadric = er.cls[er.vertex_of(mid)] == VClass::W;
      // q+1 neighbors of s to start from, less one per quadric among
      // {s, t, midpoint} (quadric-incident edges close no second triangle)
      return q + 1 - quadric_endpoints - (mid_quadric ? 1 : 0);
    }
    default: {  // length 4
      if (adjacent)
        return quadric_endpoints >= 1 ? q * q - q : (q - 1) * (q - 1);
      if (quadric_endpoints == 2) return (q - 1) * (q - 1);
      if (quadric_endpoints == 1) {
        VClass other = sq ? er.cls[t] : er.cls[s];
        return other == VClass::V1 ? q * q - q - 2 : q * q - q;
      }
      VClass cs = er.cls[s], ct = er.cls[t];
      if (cs == VClass::V2 && ct == VClass::V2) return q * q;
      if (cs != ct) return q * q - 2;  // one V1, one V2
      // both V1: depends on whether the unique midpoint is quadric
      ProjectivePoint mid = cross(er.field, er.points[s], er.points[t]);
      bool mid_quadric = er.cls[er.vertex_of(mid)] == VClass::W;
      return mid_quadric ? q * q - 2 : q * q - 4;
    }
  }
}

Route bfs_route(const Graph& g, int s, int t) {
  if (s == t) throw SameVertexError();
  std::vector<int> parent(g.n, -2);
  parent[s] = -1;
  std::vector<int> frontier{s};
  while (!frontier.empty() && parent[t] == -2) {
    std::vector<int> next;
    for (int u : frontier)
      for (int v : g.adj[u])
        if (parent[v] == -2) {
          parent[v] = u;
          next.push_back(v);
        }
    frontier = std::move(next);
  }
  Route r;
  r.policy = RoutePolicy::Min;
  if (parent[t] == -2) return r;  // unreachable: empty hops
  for (int v = t; v != -1; v = parent[v]) r.hops.push_back(v);
  std::reverse(r.hops.begin(), r.hops.end());
  return r;
}

}  // namespace polarfly
