#ifndef POLARFLY_ANALYSIS_HPP
#define POLARFLY_ANALYSIS_HPP

#include <random>
#include <vector>

#include "polarfly/ergraph.hpp"

namespace polarfly {

/// n / moore_bound(k, d) as an exact fraction.
struct MooreEfficiency {
  long long numerator = 0;
  long long denominator = 1;
  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

long long moore_bound(int k, int d);
MooreEfficiency moore_efficiency(int k, long long n, int d);

struct RadixEntry {
  int radix;  // k = q + 1
  int q;
  long long n;  // q^2 + q + 1
};

/// All prime powers q with k_min <= q+1 <= k_max.
std::vector<RadixEntry> feasible_radixes(int k_min, int k_max);

struct BisectionResult {
  long long cut_edges = 0;
  long long total_edges = 0;
  double fraction = 0.0;
  std::vector<int> side;  // 0/1 per vertex; sizes differ by at most 1
};

/// Best balanced cut found by multi-start FM-style refinement. Self-loops
/// are excluded from both the cut and the total.
BisectionResult bisection(const Graph& g, int restarts, std::uint64_t seed);

struct ResilienceStep {
  double failed_fraction = 0.0;
  int diameter = 0;  // kInfiniteDiameter once disconnected
  double avg_shortest_path = 0.0;
};

/// Removes `step` uniformly random edges at a time, recording diameter
/// and average path length after each step, until disconnection.
std::vector<ResilienceStep> resilience_run(const Graph& g, std::uint64_t seed,
                                           int step);

/// Random k-regular simple graph by the pairing model with rejection;
/// retries internally until simple and connected.
Graph random_regular_baseline(int n, int k, std::uint64_t seed);

}  // namespace polarfly

#endif
