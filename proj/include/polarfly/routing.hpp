#ifndef POLARFLY_ROUTING_HPP
#define POLARFLY_ROUTING_HPP

#include <random>
#include <vector>

#include "polarfly/ergraph.hpp"

namespace polarfly {

enum class RoutePolicy { Min, Valiant, CompactValiant, UgalChosenMin, UgalChosenValiant };

struct Route {
  std::vector<int> hops;  // vertex IDs, source first
  RoutePolicy policy = RoutePolicy::Min;

  int length() const { return static_cast<int>(hops.size()) - 1; }
};

using Rng = std::mt19937_64;

/// 1-hop if adjacent, otherwise the 2-hop route through cross(s, t).
Route min_route(const ErGraph& er, int s, int t);

/// Concatenation of minimal routes through a uniformly random
/// intermediate r not in {s, t}; collapsed to a simple path, length <= 4.
Route valiant_route(const ErGraph& er, int s, int t, Rng& rng);

/// Valiant with the intermediate drawn from the neighbors of s, skipping
/// neighbors whose minimal path to t bounces back through s. Only defined
/// for non-adjacent endpoints; length <= 3.
Route compact_valiant_route(const ErGraph& er, int s, int t, Rng& rng);

enum class UgalVariant { Ugal, UgalPF };
enum class UgalChoice { Min, Valiant };

/// Standard local-UGAL product comparison (ties go minimal), or the
/// 2/3-occupancy threshold rule for the UGAL_PF variant.
UgalChoice ugal_decide(int min_queue, int min_len, int val_queue, int val_len,
                       UgalVariant variant, int buffer_capacity);

/// Number of simple paths of exactly `length` edges between s and t,
/// counted by exhaustive DFS. length must be in [1, 4].
long long count_paths(const Graph& g, int s, int t, int length);

/// Closed-form path count from the per-length case analysis of ER_q;
/// independent of count_paths and cross-checked against it in tests.
long long expected_path_count(const ErGraph& er, int s, int t, int length);

/// BFS shortest route for graphs where the algebraic 2-path is
/// unavailable (damaged or expanded graphs).
Route bfs_route(const Graph& g, int s, int t);

}  // namespace polarfly

#endif
