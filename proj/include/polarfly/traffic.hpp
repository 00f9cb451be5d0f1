#ifndef POLARFLY_TRAFFIC_HPP
#define POLARFLY_TRAFFIC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "polarfly/graph.hpp"

namespace polarfly {

enum class TrafficKind { Uniform, RandomPermutation, Tornado, Perm1Hop, Perm2Hop };

/// Router-level traffic pattern. Permutation kinds hold a bijection over
/// routers with no self-maps; Uniform draws a fresh destination per
/// packet.
struct TrafficPattern {
  TrafficKind kind = TrafficKind::Uniform;
  std::vector<int> mapping;  // empty for Uniform

  int destination(int src_router, int n_routers, std::mt19937_64& rng) const;
};

/// Builds a pattern over the routers of g. Perm1Hop needs destinations
/// adjacent to their source, Perm2Hop at hop distance exactly 2; both
/// retry with fresh randomness and throw InfeasiblePatternError when no
/// bijection is found.
TrafficPattern make_traffic(TrafficKind kind, const Graph& g, std::uint64_t seed);

}  // namespace polarfly

#endif
