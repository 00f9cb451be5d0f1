#include <doctest.h>

#include "polarfly/graph.hpp"
#include "polarfly/netsim.hpp"

using namespace polarfly;

namespace {

SimConfig base_config(const ErGraph& er) {
  SimConfig cfg;
  cfg.er = &er;
  cfg.endpoints_per_router = 4;
  cfg.warmup_cycles = 500;
  cfg.measure_cycles = 2500;
  cfg.seed = 7;
  return cfg;
}

bool same_stats(const SimStats& a, const SimStats& b) {
  return a.offered_load == b.offered_load &&
         a.accepted_throughput == b.accepted_throughput &&
         a.avg_latency == b.avg_latency && a.p50_latency == b.p50_latency &&
         a.p99_latency == b.p99_latency &&
         a.packets_measured == b.packets_measured &&
         a.latency_histogram == b.latency_histogram &&
         a.link_utilization == b.link_utilization;
}

}  // namespace

TEST_CASE("zero injection rate moves nothing") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.injection_rate = 0.0;
  cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 1);
  SimStats s = run_sim(cfg);
  CHECK(s.accepted_throughput == 0.0);
  CHECK(s.avg_latency == -1.0);
  CHECK(s.packets_measured == 0);
}

TEST_CASE("identical config and seed reproduce every statistic") {
  ErGraph er = build_er(7);
  for (SimRouting r : {SimRouting::Min, SimRouting::Ugal, SimRouting::UgalPF}) {
    SimConfig cfg = base_config(er);
    cfg.injection_rate = 0.15;
    cfg.routing = r;
    cfg.traffic = make_traffic(TrafficKind::RandomPermutation, er.g, 3);
    SimStats a = run_sim(cfg);
    SimStats b = run_sim(cfg);
    CHECK(same_stats(a, b));
    CHECK(a.packets_measured > 0);
  }
}

TEST_CASE("different seeds decorrelate the runs") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.injection_rate = 0.15;
  cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 3);
  SimStats a = run_sim(cfg);
  cfg.seed = 8;
  SimStats b = run_sim(cfg);
  CHECK_FALSE(same_stats(a, b));
}

TEST_CASE("flit conservation audit stays silent") {
  ErGraph er = build_er(7);
  for (SimRouting r : {SimRouting::Min, SimRouting::Valiant,
                       SimRouting::CompactValiant, SimRouting::UgalPF}) {
    SimConfig cfg = base_config(er);
    cfg.injection_rate = 0.3;
    cfg.routing = r;
    cfg.audit_interval = 25;  // throws on any imbalance
    cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 2);
    CHECK_NOTHROW(run_sim(cfg));
  }
}

TEST_CASE("light-load latency matches the pipeline model") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.injection_rate = 0.05;
  cfg.warmup_cycles = 1000;
  cfg.measure_cycles = 5000;
  cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 1);
  SimStats s = run_sim(cfg);
  auto [dist_sum, pairs] = avg_shortest_path_exact(er.g);
  double mean_hops = static_cast<double>(dist_sum) / pairs;
  double analytic = mean_hops * cfg.router_delay + (cfg.packet_size - 1);
  CHECK(s.avg_latency > 0.9 * analytic);
  CHECK(s.avg_latency < 1.1 * analytic);
  // nothing can beat one hop plus serialization
  for (int b = 0; b < cfg.router_delay + cfg.packet_size - 1; ++b)
    CHECK(s.latency_histogram[b] == 0);
}

TEST_CASE("per-VC buffers must hold a whole packet") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.buffer_per_port = 8;  // 2 flits per VC < packet_size
  cfg.injection_rate = 0.1;
  cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 1);
  CHECK_THROWS_AS(run_sim(cfg), std::invalid_argument);
}

TEST_CASE("latency grows with offered load") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.traffic = make_traffic(TrafficKind::Uniform, er.g, 1);
  SweepResult sr = sweep(cfg, {0.05, 0.3, 0.9});
  REQUIRE(sr.stats.size() == 3);
  CHECK(sr.rates == std::vector<double>{0.05, 0.3, 0.9});
  CHECK(sr.stats[0].avg_latency < sr.stats[1].avg_latency);
  CHECK(sr.stats[1].avg_latency < sr.stats[2].avg_latency);
  CHECK(sr.saturated);
  CHECK(sr.saturation_rate == 0.9);
}

TEST_CASE("permutation with minimal routing saturates near 1/p") {
  ErGraph er = build_er(7);
  SimConfig cfg = base_config(er);
  cfg.traffic = make_traffic(TrafficKind::RandomPermutation, er.g, 11);
  SweepResult sr = sweep(cfg, {0.05, 0.15, 0.3, 0.5});
  CHECK(sr.saturated);
  CHECK(sr.saturation_rate <= 1.0 / cfg.endpoints_per_router + 0.05);
}

TEST_CASE("tornado runs under every routing policy") {
  ErGraph er = build_er(5);
  for (SimRouting r : {SimRouting::Min, SimRouting::Valiant,
                       SimRouting::CompactValiant, SimRouting::Ugal,
                       SimRouting::UgalPF}) {
    SimConfig cfg = base_config(er);
    cfg.injection_rate = 0.1;
    cfg.routing = r;
    cfg.audit_interval = 100;
    cfg.traffic = make_traffic(TrafficKind::Tornado, er.g, 1);
    SimStats s = run_sim(cfg);
    CHECK(s.packets_measured > 0);
    CHECK(s.avg_latency > 0.0);
  }
}
