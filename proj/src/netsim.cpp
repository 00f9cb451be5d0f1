#include "polarfly/netsim.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "polarfly/routing.hpp"

namespace polarfly {

namespace {

constexpr int kHistBuckets = 4096;
constexpr long long kWatchdogCycles = 10000;

struct FlitRec {
  int pkt;
  std::int8_t idx;  // position within the packet, 0 = head
  std::int8_t hop;  // index of the current router within the route
};

struct Packet {
  std::array<std::int16_t, 5> route{};
  std::int8_t len = 0;  // hop count; route has len+1 routers
  std::int8_t dst_ep = 0;
  long long birth = 0;
};

struct PendingPacket {
  int dst;
  long long birth;
};

struct Arrival {
  long long time;
  int router;
  int in_port;
  int vc;
  FlitRec flit;
};

struct InjectorState {
  int cur_pkt = -1;
  int next_idx = 0;
  int vc = 0;  // injection-side FIFO the current packet occupies
};

struct StagedFlit {
  FlitRec f;
  int ovc;
};

class Sim {
 public:
  explicit Sim(const SimConfig& cfg) : cfg_(cfg), er_(*cfg.er), g_(er_.g) {
    n_ = g_.n;
    p_ = cfg_.endpoints_per_router;
    vcs_ = cfg_.vcs;
    vc_cap_ = cfg_.buffer_per_port / vcs_;
    if (vc_cap_ < cfg_.packet_size)
      throw std::invalid_argument("per-VC buffer smaller than one packet");

    deg_.resize(n_);
    rev_.resize(n_);
    edge_id_.resize(n_);
    std::map<std::pair<int, int>, int> eid;
    auto all_edges = g_.edges();
    for (size_t i = 0; i < all_edges.size(); ++i) eid[all_edges[i]] = static_cast<int>(i);
    for (int r = 0; r < n_; ++r) {
      deg_[r] = static_cast<int>(g_.adj[r].size());
      rev_[r].resize(deg_[r]);
      edge_id_[r].resize(deg_[r]);
      for (int j = 0; j < deg_[r]; ++j) {
        int nb = g_.adj[r][j];
        auto it = std::lower_bound(g_.adj[nb].begin(), g_.adj[nb].end(), r);
        rev_[r][j] = static_cast<int>(it - g_.adj[nb].begin());
        edge_id_[r][j] = eid[{std::min(r, nb), std::max(r, nb)}];
      }
    }

    stage_cap_ = 2 * cfg_.packet_size;
    bufs_.resize(n_);
    stage_.resize(n_);
    out_occ_.resize(n_);
    committed_.resize(n_);
    owner_.resize(n_);
    credit_.resize(n_);
    rr_in_.resize(n_);
    rr_out_.resize(n_);
    for (int r = 0; r < n_; ++r) {
      int ni = deg_[r] + p_, no = deg_[r] + p_;
      bufs_[r].assign(static_cast<size_t>(ni) * vcs_, {});
      stage_[r].assign(no, {});
      out_occ_[r].assign(no, 0);
      committed_[r].assign(no, 0);
      owner_[r].assign(static_cast<size_t>(no) * vcs_, -1);
      credit_[r].assign(static_cast<size_t>(deg_[r]) * vcs_, vc_cap_);
      rr_in_[r].assign(ni, 0);
      rr_out_[r].assign(no, 0);
    }

    rngs_.reserve(n_);
    for (int r = 0; r < n_; ++r)
      rngs_.emplace_back(cfg_.seed ^
                         (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(r) + 1)));

    pending_.assign(static_cast<size_t>(n_) * p_, {});
    inj_.assign(static_cast<size_t>(n_) * p_, {});
    link_grants_.assign(all_edges.size(), 0);
    hist_.assign(kHistBuckets + 1, 0);
  }

  SimStats run() {
    const long long warm = cfg_.warmup_cycles;
    const long long end = warm + cfg_.measure_cycles;
    std::bernoulli_distribution bern(cfg_.injection_rate /
                                     static_cast<double>(cfg_.packet_size));

    for (now_ = 0; now_ < end; ++now_) {
      drain_arrivals();
      inject(bern, warm, end);
      allocate();
      link_send(warm, end);
      if (cfg_.audit_interval > 0 && now_ % cfg_.audit_interval == 0) audit();
      if (buffered_ + static_cast<long long>(arrivals_.size()) > 0 &&
          now_ - last_progress_ > kWatchdogCycles)
        throw std::runtime_error("simulation watchdog: no flit moved for " +
                                 std::to_string(kWatchdogCycles) + " cycles");
    }
    return finish();
  }

 private:
  int port_of(int r, int nb) const {
    auto it = std::lower_bound(g_.adj[r].begin(), g_.adj[r].end(), nb);
    return static_cast<int>(it - g_.adj[r].begin());
  }

  // Backlog a fresh packet would queue behind on this output: flits held
  // locally for the port plus the consumed credits of the downstream VC 0
  // buffer (a new packet's first hop always rides VC 0). Compared against
  // vc_cap_ in the adaptation rules.
  int output_occupancy(int r, int op) const {
    int downstream =
        op < deg_[r] ? vc_cap_ - credit_[r][static_cast<size_t>(op) * vcs_] : 0;
    return out_occ_[r][op] + committed_[r][op] + downstream;
  }

  int flit_out_port(int r, const FlitRec& f) const {
    const Packet& pk = packets_[f.pkt];
    if (f.hop == pk.len) return deg_[r] + pk.dst_ep;
    return port_of(r, pk.route[f.hop + 1]);
  }

  std::deque<FlitRec>& buf(int r, int ip, int vc) {
    return bufs_[r][static_cast<size_t>(ip) * vcs_ + vc];
  }

  void enqueue_flit(int r, int ip, int vc, const FlitRec& f) {
    buf(r, ip, vc).push_back(f);
    ++buffered_;
    int op = flit_out_port(r, f);
    ++out_occ_[r][op];
    if (f.hop == 0) --committed_[r][op];  // the routed flit is now buffered
    last_progress_ = now_;
  }

  void drain_arrivals() {
    while (!arrivals_.empty() && arrivals_.front().time == now_) {
      const Arrival& a = arrivals_.front();
      enqueue_flit(a.router, a.in_port, a.vc, a.flit);
      arrivals_.pop_front();
    }
  }

  int alloc_packet() {
    if (!free_ids_.empty()) {
      int id = free_ids_.back();
      free_ids_.pop_back();
      return id;
    }
    packets_.emplace_back();
    return static_cast<int>(packets_.size()) - 1;
  }

  void set_route(Packet& pk, const Route& r) {
    pk.len = static_cast<std::int8_t>(r.length());
    for (size_t i = 0; i < r.hops.size(); ++i)
      pk.route[i] = static_cast<std::int16_t>(r.hops[i]);
  }

  void compute_route(Packet& pk, int s, int t, Rng& rng) {
    switch (cfg_.routing) {
      case SimRouting::Min:
        set_route(pk, min_route(er_, s, t));
        return;
      case SimRouting::Valiant:
        set_route(pk, valiant_route(er_, s, t, rng));
        return;
      case SimRouting::CompactValiant:
        if (g_.has_edge(s, t))
          set_route(pk, min_route(er_, s, t));
        else
          set_route(pk, compact_valiant_route(er_, s, t, rng));
        return;
      case SimRouting::Ugal: {
        Route mn = min_route(er_, s, t);
        Route vl = valiant_route(er_, s, t, rng);
        int mq = output_occupancy(s, port_of(s, mn.hops[1]));
        int vq = output_occupancy(s, port_of(s, vl.hops[1]));
        auto pick = ugal_decide(mq, mn.length(), vq, vl.length(),
                                UgalVariant::Ugal, vc_cap_);
        set_route(pk, pick == UgalChoice::Min ? mn : vl);
        return;
      }
      case SimRouting::UgalPF: {
        Route mn = min_route(er_, s, t);
        // detour through the least backlogged neighbor (random among ties),
        // then minimally onward; a blind random pick keeps running into
        // links pinned by other flows' min traffic
        int best_r = -1, vq = 0, ties = 0;
        for (int j = 0; j < deg_[s]; ++j) {
          int r = g_.adj[s][j];
          if (r == t) continue;
          int occ = output_occupancy(s, j);
          if (best_r < 0 || occ < vq) {
            best_r = r;
            vq = occ;
            ties = 1;
          } else if (occ == vq) {
            std::uniform_int_distribution<int> coin(0, ties);
            if (coin(rng) == 0) best_r = r;
            ++ties;
          }
        }
        Route vl = min_route(er_, best_r, t);
        vl.hops.insert(vl.hops.begin(), s);
        int mq = output_occupancy(s, port_of(s, mn.hops[1]));
        auto pick = ugal_decide(mq, mn.length(), vq, vl.length(),
                                UgalVariant::UgalPF, vc_cap_);
        set_route(pk, pick == UgalChoice::Min ? mn : vl);
        return;
      }
    }
  }

  void inject(std::bernoulli_distribution& bern, long long warm, long long end) {
    (void)warm;
    (void)end;
    for (int r = 0; r < n_; ++r) {
      Rng& rng = rngs_[r];
      for (int e = 0; e < p_; ++e) {
        if (cfg_.injection_rate > 0.0 && bern(rng)) {
          int dst = cfg_.traffic.destination(r, n_, rng);
          pending_[static_cast<size_t>(r) * p_ + e].push_back({dst, now_});
        }
        InjectorState& st = inj_[static_cast<size_t>(r) * p_ + e];
        auto& pend = pending_[static_cast<size_t>(r) * p_ + e];
        if (st.cur_pkt < 0) {
          if (pend.empty()) continue;
          // spread packets over the injection port's FIFOs so one packet
          // stuck behind a busy output does not block later packets headed
          // elsewhere; take the next FIFO with room for a whole packet
          int next_vc = -1;
          for (int k = 1; k <= vcs_; ++k) {
            int cand = (st.vc + k) % vcs_;
            if (static_cast<int>(buf(r, deg_[r] + e, cand).size()) +
                    cfg_.packet_size <=
                vc_cap_) {
              next_vc = cand;
              break;
            }
          }
          if (next_vc < 0) continue;
          st.vc = next_vc;
          PendingPacket pp = pend.front();
          pend.pop_front();
          int id = alloc_packet();
          Packet& pk = packets_[id];
          pk = Packet{};
          pk.birth = pp.birth;
          pk.dst_ep = static_cast<std::int8_t>(e);
          compute_route(pk, r, pp.dst, rng);
          // count the whole packet against its first output right away so
          // decisions made later this cycle see it
          committed_[r][port_of(r, pk.route[1])] += cfg_.packet_size;
          st.cur_pkt = id;
          st.next_idx = 0;
        }
        FlitRec f{st.cur_pkt, static_cast<std::int8_t>(st.next_idx), 0};
        enqueue_flit(r, deg_[r] + e, st.vc, f);
        ++entered_;
        if (++st.next_idx == cfg_.packet_size) st.cur_pkt = -1;
      }
    }
  }

  // Iterative round-robin separable allocation with crossbar speedup 2:
  // an output accepts up to two flits per cycle into its staging queue,
  // the link drains one per cycle. The speedup recovers the utilization
  // lost to head-of-line blocking in the per-VC input FIFOs.
  void allocate() {
    constexpr int kAllocIters = 4;
    constexpr int kSpeedup = 2;
    for (int r = 0; r < n_; ++r) {
      const int ni = deg_[r] + p_;
      const int no = deg_[r] + p_;
      struct Req {
        int ip, vc, op, ovc;
      };
      std::vector<char> matched_in(ni, 0);
      std::vector<int> matched_out(no, 0);
      std::vector<std::vector<Req>> reqs(no);
      for (int iter = 0; iter < kAllocIters; ++iter) {
        for (auto& v : reqs) v.clear();
        bool any = false;
        // input stage: each unmatched input nominates one VC head whose
        // output is still free
        for (int ip = 0; ip < ni; ++ip) {
          if (matched_in[ip]) continue;
          for (int k = 0; k < vcs_; ++k) {
            int vc = (rr_in_[r][ip] + k) % vcs_;
            auto& q = buf(r, ip, vc);
            if (q.empty()) continue;
            const FlitRec& f = q.front();
            int op = flit_out_port(r, f);
            if (matched_out[op] >= kSpeedup) continue;
            if (static_cast<int>(stage_[r][op].size()) >= stage_cap_) continue;
            int ovc = f.hop == packets_[f.pkt].len ? 0 : f.hop;
            int own = owner_[r][static_cast<size_t>(op) * vcs_ + ovc];
            if (f.idx == 0 ? own != -1 : own != f.pkt) continue;
            if (op < deg_[r] &&
                credit_[r][static_cast<size_t>(op) * vcs_ + ovc] == 0)
              continue;
            reqs[op].push_back({ip, vc, op, ovc});
            any = true;
            break;
          }
        }
        if (!any) break;
        // output stage: round-robin over requesting inputs
        for (int op = 0; op < no; ++op) {
          if (reqs[op].empty()) continue;
          const Req* win = &reqs[op][0];
          int best = (win->ip - rr_out_[r][op] + ni) % ni;
          for (const Req& c : reqs[op]) {
            int d = (c.ip - rr_out_[r][op] + ni) % ni;
            if (d < best) {
              best = d;
              win = &c;
            }
          }
          matched_in[win->ip] = 1;
          ++matched_out[op];
          grant(r, *win);
        }
      }
    }
  }

  // Moves a flit from its input FIFO into the output staging queue,
  // reserving the downstream buffer slot via a credit.
  void grant(int r, const auto& rq) {
    auto& q = buf(r, rq.ip, rq.vc);
    FlitRec f = q.front();
    q.pop_front();
    --out_occ_[r][rq.op];
    rr_in_[r][rq.ip] = (rq.vc + 1) % vcs_;
    rr_out_[r][rq.op] = (rq.ip + 1) % (deg_[r] + p_);
    last_progress_ = now_;

    int* own = &owner_[r][static_cast<size_t>(rq.op) * vcs_ + rq.ovc];
    if (f.idx == 0) *own = f.pkt;
    if (f.idx == cfg_.packet_size - 1) *own = -1;

    if (rq.ip < deg_[r]) {
      int up = g_.adj[r][rq.ip];
      ++credit_[up][static_cast<size_t>(rev_[r][rq.ip]) * vcs_ + rq.vc];
    }
    if (rq.op < deg_[r])
      --credit_[r][static_cast<size_t>(rq.op) * vcs_ + rq.ovc];

    stage_[r][rq.op].push_back({f, rq.ovc});
  }

  // Each output link (and each ejection port) forwards one staged flit
  // per cycle.
  void link_send(long long warm, long long end) {
    for (int r = 0; r < n_; ++r) {
      const int no = deg_[r] + p_;
      for (int op = 0; op < no; ++op) {
        auto& st = stage_[r][op];
        if (st.empty()) continue;
        auto [f, ovc] = st.front();
        st.pop_front();
        --buffered_;
        last_progress_ = now_;
        if (op < deg_[r]) {
          int nb = g_.adj[r][op];
          arrivals_.push_back({now_ + cfg_.router_delay, nb, rev_[r][op], ovc,
                               {f.pkt, f.idx,
                                static_cast<std::int8_t>(f.hop + 1)}});
          if (now_ >= warm && now_ < end) ++link_grants_[edge_id_[r][op]];
        } else {
          ++delivered_;
          if (now_ >= warm && now_ < end) ++delivered_measured_;
          if (f.idx == cfg_.packet_size - 1) {
            const Packet& pk = packets_[f.pkt];
            if (pk.birth >= warm && pk.birth < end) {
              long long lat = now_ - pk.birth;
              latency_sum_ += lat;
              ++packets_measured_;
              ++hist_[std::min<long long>(lat, kHistBuckets)];
            }
            free_ids_.push_back(f.pkt);
          }
        }
      }
    }
  }

  void audit() const {
    long long accounted =
        delivered_ + buffered_ + static_cast<long long>(arrivals_.size());
    if (entered_ != accounted)
      throw std::runtime_error("flit conservation violated at cycle " +
                               std::to_string(now_) + ": entered " +
                               std::to_string(entered_) + ", accounted " +
                               std::to_string(accounted));
  }

  SimStats finish() const {
    SimStats s;
    s.offered_load = cfg_.injection_rate;
    s.accepted_throughput =
        static_cast<double>(delivered_measured_) /
        (static_cast<double>(cfg_.measure_cycles) * n_ * p_);
    s.packets_measured = packets_measured_;
    s.latency_histogram = hist_;
    if (packets_measured_ > 0) {
      s.avg_latency = static_cast<double>(latency_sum_) /
                      static_cast<double>(packets_measured_);
      long long c50 = (packets_measured_ + 1) / 2;
      long long c99 = (packets_measured_ * 99 + 99) / 100;
      long long cum = 0;
      for (int b = 0; b <= kHistBuckets; ++b) {
        cum += hist_[b];
        if (s.p50_latency < 0 && cum >= c50) s.p50_latency = b;
        if (s.p99_latency < 0 && cum >= c99) {
          s.p99_latency = b;
          break;
        }
      }
    }
    s.link_utilization.resize(link_grants_.size());
    for (size_t i = 0; i < link_grants_.size(); ++i)
      s.link_utilization[i] = static_cast<double>(link_grants_[i]) /
                              (2.0 * static_cast<double>(cfg_.measure_cycles));
    return s;
  }

  const SimConfig& cfg_;
  const ErGraph& er_;
  const Graph& g_;
  int n_, p_, vcs_, vc_cap_;

  std::vector<int> deg_;
  std::vector<std::vector<int>> rev_;
  std::vector<std::vector<int>> edge_id_;

  int stage_cap_ = 0;
  std::vector<std::vector<std::deque<FlitRec>>> bufs_;   // [r][ip*vcs+vc]
  std::vector<std::vector<std::deque<StagedFlit>>> stage_;  // [r][op]
  std::vector<std::vector<int>> out_occ_;               // [r][op]
  std::vector<std::vector<int>> committed_;             // [r][op]
  std::vector<std::vector<int>> owner_;                 // [r][op*vcs+vc]
  std::vector<std::vector<int>> credit_;                // [r][op*vcs+vc]
  std::vector<std::vector<int>> rr_in_, rr_out_;

  std::vector<Rng> rngs_;
  std::vector<std::deque<PendingPacket>> pending_;
  std::vector<InjectorState> inj_;
  std::vector<Packet> packets_;
  std::vector<int> free_ids_;
  std::deque<Arrival> arrivals_;

  long long now_ = 0, last_progress_ = 0;
  long long entered_ = 0, delivered_ = 0, buffered_ = 0;
  long long delivered_measured_ = 0, packets_measured_ = 0, latency_sum_ = 0;
  std::vector<long long> link_grants_;
  std::vector<long long> hist_;
};

}  // namespace

SimStats run_sim(const SimConfig& cfg) {
  if (cfg.er == nullptr) throw std::invalid_argument("missing topology");
  if (cfg.injection_rate < 0.0 || cfg.injection_rate > 1.0)
    throw std::invalid_argument("injection_rate out of [0,1]");
  Sim sim(cfg);
  return sim.run();
}

SweepResult sweep(const SimConfig& base, const std::vector<double>& rates) {
  SweepResult out;
  out.rates = rates;
  for (size_t i = 0; i < rates.size(); ++i) {
    SimConfig cfg = base;
    cfg.injection_rate = rates[i];
    cfg.seed = base.seed + i;
    out.stats.push_back(run_sim(cfg));
  }
  double baseline = -1.0;
  for (const auto& s : out.stats)
    if (s.avg_latency >= 0) {
      baseline = s.avg_latency;
      break;
    }
  for (size_t i = 0; i < out.stats.size(); ++i) {
    const SimStats& s = out.stats[i];
    bool blown = s.avg_latency < 0 ||
                 (baseline > 0 && s.avg_latency > 4.0 * baseline) ||
                 (s.offered_load > 0 &&
                  s.accepted_throughput / s.offered_load < 0.95);
    if (blown) {
      out.saturation_rate = rates[i];
      out.saturated = true;
      return out;
    }
  }
  if (!rates.empty()) out.saturation_rate = rates.back();
  return out;
}

}  // namespace polarfly
