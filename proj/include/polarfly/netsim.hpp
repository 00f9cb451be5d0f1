#ifndef POLARFLY_NETSIM_HPP
#define POLARFLY_NETSIM_HPP

#include <cstdint>
#include <vector>

#include "polarfly/ergraph.hpp"
#include "polarfly/traffic.hpp"

namespace polarfly {

enum class SimRouting { Min, Valiant, CompactValiant, Ugal, UgalPF };

struct SimConfig {
  const ErGraph* er = nullptr;
  int endpoints_per_router = 1;
  int packet_size = 4;
  int buffer_per_port = 128;  // flits, split evenly across VCs
  int vcs = 4;
  int router_delay = 3;  // cycles per link traversal
  double injection_rate = 0.0;  // fraction of per-endpoint capacity
  TrafficPattern traffic;
  SimRouting routing = SimRouting::Min;
  long long warmup_cycles = 10000;
  long long measure_cycles = 50000;
  std::uint64_t seed = 1;
  long long audit_interval = 0;  // 0 disables the conservation audit
};

struct SimStats {
  double offered_load = 0.0;
  double accepted_throughput = 0.0;  // delivered flits / endpoint / cycle
  double avg_latency = -1.0;         // cycles; -1 when no packet finished
  double p50_latency = -1.0;
  double p99_latency = -1.0;
  long long packets_measured = 0;
  std::vector<long long> latency_histogram;  // 1-cycle buckets, last = overflow
  std::vector<double> link_utilization;      // per directed edge, edges() order
};

/// Cycle-accurate run: input-queued routers, round-robin separable
/// allocation, credit backpressure, wormhole VC ownership, VC = hop
/// index. Bit-identical output for identical (cfg, seed).
SimStats run_sim(const SimConfig& cfg);

struct SweepResult {
  std::vector<double> rates;
  std::vector<SimStats> stats;
  double saturation_rate = 0.0;
  bool saturated = false;
};

/// One run per rate (ascending). Saturation = first rate whose latency
/// exceeds 4x the lowest-rate latency or whose accepted/offered < 0.95;
/// when no rate qualifies, saturation_rate reports the last swept rate
/// with saturated = false.
SweepResult sweep(const SimConfig& base, const std::vector<double>& rates);

}  // namespace polarfly

#endif
