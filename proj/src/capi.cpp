#include "polarfly.h"

#include <nlohmann/json.hpp>

#include <cstring>
#include <sstream>
#include <string>

#include "polarfly/analysis.hpp"
#include "polarfly/ergraph.hpp"
#include "polarfly/expand.hpp"
#include "polarfly/io.hpp"
#include "polarfly/layout.hpp"
#include "polarfly/netsim.hpp"
#include "polarfly/routing.hpp"

using nlohmann::json;
using namespace polarfly;

struct pf_topology {
  ErGraph er;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pf_status fail(pf_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
pf_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(PF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const json::exception& e) {
    return fail(PF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const IoError& e) {
    return fail(PF_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(PF_ERR_INVALID_ARGUMENT, e.what());
  } catch (...) {
    return fail(PF_ERR_INTERNAL, "unknown error");
  }
}

void append_checks(json& arr, const std::vector<ClauseResult>& checks,
                   const std::string& prefix, bool& all) {
  for (const auto& c : checks) {
    arr.push_back({{"name", prefix + c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
}

void push_check(json& arr, const std::string& name, bool pass,
                const std::string& detail, bool& all) {
  arr.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  all = all && pass;
}

long long get_int(const json& j, const char* key, long long fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer())
    throw std::invalid_argument(std::string("config key '") + key +
                                "' must be an integer");
  return j[key].get<long long>();
}

}  // namespace

extern "C" {

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_string_free(char* s) { delete[] s; }

pf_status pf_topology_create(int q, pf_topology** out) {
  if (out == nullptr) return fail(PF_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&]() -> pf_status {
    auto* t = new pf_topology{build_er(q)};
    *out = t;
    return PF_OK;
  });
}

pf_status pf_topology_from_edge_list(const char* text, pf_topology** out) {
  if (text == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    std::istringstream is{std::string(text)};
    auto* t = new pf_topology{read_edge_list(is)};
    *out = t;
    return PF_OK;
  });
}

void pf_topology_destroy(pf_topology* t) { delete t; }

int pf_topology_q(const pf_topology* t) { return t ? t->er.q : -1; }

int pf_topology_vertex_count(const pf_topology* t) { return t ? t->er.n() : -1; }

long long pf_topology_edge_count(const pf_topology* t) {
  return t ? static_cast<long long>(t->er.g.edge_count()) : -1;
}

pf_status pf_topology_render(const pf_topology* t, const char* format,
                             char** out) {
  if (t == nullptr || format == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    std::string fmt(format);
    if (fmt == "edgelist") {
      *out = dup_string(edge_list_string(t->er));
    } else if (fmt == "dot") {
      std::ostringstream os;
      write_dot(os, t->er);
      *out = dup_string(os.str());
    } else if (fmt == "json") {
      *out = dup_string(graph_json(t->er));
    } else {
      return fail(PF_ERR_INVALID_ARGUMENT, "unknown format: " + fmt);
    }
    return PF_OK;
  });
}

pf_status pf_verify(const pf_topology* t, int starter, char** report,
                    int* passed) {
  if (t == nullptr || report == nullptr || passed == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    const ErGraph& er = t->er;
    const int q = er.q;
    json checks = json::array();
    bool all = true;

    int w = 0, v1 = 0, v2 = 0;
    for (int v = 0; v < er.n(); ++v) {
      if (er.cls[v] == VClass::W) ++w;
      else if (er.cls[v] == VClass::V1) ++v1;
      else ++v2;
    }
    push_check(checks, "vertex_count", er.n() == q * q + q + 1,
               std::to_string(er.n()), all);
    push_check(checks, "class_counts",
               w == q + 1 && v1 == q * (q + 1) / 2 && v2 == q * (q - 1) / 2,
               "W=" + std::to_string(w) + " V1=" + std::to_string(v1) +
                   " V2=" + std::to_string(v2),
               all);
    bool deg_ok = true;
    for (int v = 0; v < er.n(); ++v) {
      int expect = er.is_quadric_vertex(v) ? q : q + 1;
      if (er.g.degree(v) != expect) deg_ok = false;
    }
    push_check(checks, "degrees", deg_ok, "", all);
    push_check(checks, "diameter_two", diameter(er.g) == 2, "", all);

    if (q % 2 == 1) {
      append_checks(checks, verify_property1(er).clauses, "", all);
      ClusterLayout layout =
          starter >= 0 ? build_layout(er, starter) : build_layout(er);
      append_checks(checks, verify_intra(er, layout).checks, "layout.", all);
      append_checks(checks, verify_inter(er, layout).checks, "layout.", all);
      auto tris = enumerate_triangles(er, layout);
      long long total = static_cast<long long>(tris.size());
      long long internal = 0;
      for (const auto& tr : tris)
        if (tr.internal) ++internal;
      long long inter = total - internal;
      long long cq3 =
          static_cast<long long>(q) * (q - 1) * (q - 2) / 6;
      long long cq2 = static_cast<long long>(q) * (q - 1) / 2;
      push_check(checks, "triangle_totals",
                 inter == cq3 && internal == cq2,
                 "inter=" + std::to_string(inter) +
                     " internal=" + std::to_string(internal),
                 all);
      append_checks(checks, verify_block_design(er, layout, tris).checks,
                    "", all);
      auto dist = triangle_distribution(tris);
      auto expect = expected_triangle_distribution(q);
      push_check(checks, "triangle_distribution", dist == expect, "", all);
    }

    json j;
    j["q"] = q;
    j["passed"] = all;
    j["checks"] = checks;
    *report = dup_string(j.dump(2));
    *passed = all ? 1 : 0;
    return PF_OK;
  });
}

pf_status pf_layout(const pf_topology* t, int starter, char** out) {
  if (t == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    ClusterLayout layout =
        starter >= 0 ? build_layout(t->er, starter) : build_layout(t->er);
    auto tris = enumerate_triangles(t->er, layout);
    *out = dup_string(layout_json(t->er, layout, tris));
    return PF_OK;
  });
}

pf_status pf_expand(const pf_topology* t, const char* method,
                    int replications, const char* format, char** out) {
  if (t == nullptr || method == nullptr || format == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    ClusterLayout layout = build_layout(t->er);
    std::string m(method);
    ExpandedGraph ex = m == "quadric"
                           ? expand_quadric(t->er, layout, replications)
                       : m == "nonquadric"
                           ? expand_nonquadric(t->er, layout, replications)
                           : throw std::invalid_argument("unknown method: " + m);
    std::string fmt(format);
    if (fmt == "edgelist")
      *out = dup_string(expanded_edge_list(t->er, ex));
    else if (fmt == "json")
      *out = dup_string(expanded_json(t->er, ex));
    else
      return fail(PF_ERR_INVALID_ARGUMENT, "unknown format: " + fmt);
    return PF_OK;
  });
}

pf_status pf_route(const pf_topology* t, int src, int dst, const char* policy,
                   uint64_t seed, char** out) {
  if (t == nullptr || policy == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    if (src < 0 || dst < 0 || src >= t->er.n() || dst >= t->er.n())
      throw std::invalid_argument("vertex out of range");
    Rng rng(seed);
    std::string p(policy);
    Route r = p == "min"       ? min_route(t->er, src, dst)
              : p == "valiant" ? valiant_route(t->er, src, dst, rng)
              : p == "compact"
                  ? compact_valiant_route(t->er, src, dst, rng)
                  : throw std::invalid_argument("unknown policy: " + p);
    json j;
    j["src"] = src;
    j["dst"] = dst;
    j["policy"] = p;
    j["hops"] = r.hops;
    j["length"] = r.length();
    *out = dup_string(j.dump(2));
    return PF_OK;
  });
}

pf_status pf_simulate(const pf_topology* t, const char* config_json,
                      char** out) {
  if (t == nullptr || config_json == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    json j = json::parse(config_json);
    SimConfig cfg;
    cfg.er = &t->er;
    cfg.endpoints_per_router = static_cast<int>(get_int(j, "p_endpoints", 1));
    cfg.packet_size = static_cast<int>(get_int(j, "packet_size", 4));
    cfg.buffer_per_port = static_cast<int>(get_int(j, "buffer_per_port", 128));
    cfg.vcs = static_cast<int>(get_int(j, "vcs", 4));
    cfg.router_delay = static_cast<int>(get_int(j, "router_delay", 3));
    cfg.warmup_cycles = get_int(j, "warmup_cycles", 10000);
    cfg.measure_cycles = get_int(j, "measure_cycles", 50000);
    cfg.seed = static_cast<std::uint64_t>(get_int(j, "seed", 1));
    cfg.audit_interval = get_int(j, "audit_interval", 0);

    if (!j.contains("traffic"))
      throw std::invalid_argument("config missing required key 'traffic'");
    std::string tk = j["traffic"].get<std::string>();
    TrafficKind kind = tk == "uniform"       ? TrafficKind::Uniform
                       : tk == "permutation" ? TrafficKind::RandomPermutation
                       : tk == "tornado"     ? TrafficKind::Tornado
                       : tk == "perm1hop"    ? TrafficKind::Perm1Hop
                       : tk == "perm2hop"
                           ? TrafficKind::Perm2Hop
                           : throw std::invalid_argument(
                                 "config key 'traffic': unknown kind " + tk);
    cfg.traffic = make_traffic(kind, t->er.g, cfg.seed);

    std::string rt = j.value("routing", "min");
    cfg.routing = rt == "min"       ? SimRouting::Min
                  : rt == "valiant" ? SimRouting::Valiant
                  : rt == "compact" ? SimRouting::CompactValiant
                  : rt == "ugal"    ? SimRouting::Ugal
                  : rt == "ugal_pf"
                      ? SimRouting::UgalPF
                      : throw std::invalid_argument(
                            "config key 'routing': unknown policy " + rt);

    if (!j.contains("rates") || !j["rates"].is_array() || j["rates"].empty())
      throw std::invalid_argument(
          "config missing required key 'rates' (non-empty array)");
    std::vector<double> rates = j["rates"].get<std::vector<double>>();
    for (size_t i = 1; i < rates.size(); ++i)
      if (rates[i] < rates[i - 1])
        throw std::invalid_argument("config key 'rates' must be ascending");

    SweepResult res = sweep(cfg, rates);
    std::ostringstream os;
    os << "offered_load,accepted_throughput,avg_latency_cycles,p50,p99\n";
    for (const auto& s : res.stats)
      os << s.offered_load << ',' << s.accepted_throughput << ','
         << s.avg_latency << ',' << s.p50_latency << ',' << s.p99_latency
         << '\n';
    os << "# saturation_rate " << res.saturation_rate
       << (res.saturated ? "" : " (not reached in sweep)") << '\n';
    *out = dup_string(os.str());
    return PF_OK;
  });
}

pf_status pf_analyze(const pf_topology* t, const char* kind,
                     const char* params_json, char** out) {
  if (kind == nullptr || out == nullptr)
    return fail(PF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> pf_status {
    json p = params_json && *params_json ? json::parse(params_json)
                                         : json::object();
    std::string k(kind);
    json j;
    if (k == "moore") {
      int k_min = static_cast<int>(get_int(p, "k_min", 4));
      int k_max = static_cast<int>(get_int(p, "k_max", 128));
      json rows = json::array();
      for (const auto& e : feasible_radixes(k_min, k_max)) {
        auto eff = moore_efficiency(e.radix, e.n, 2);
        rows.push_back({{"radix", e.radix},
                        {"q", e.q},
                        {"n", e.n},
                        {"moore_bound", moore_bound(e.radix, 2)},
                        {"efficiency_num", eff.numerator},
                        {"efficiency_den", eff.denominator},
                        {"efficiency", eff.value()}});
      }
      j["radixes"] = rows;
    } else if (k == "bisection") {
      if (t == nullptr) throw std::invalid_argument("topology required");
      int restarts = static_cast<int>(get_int(p, "restarts", 32));
      std::uint64_t seed = static_cast<std::uint64_t>(get_int(p, "seed", 1));
      auto res = bisection(t->er.g, restarts, seed);
      j["cut_edges"] = res.cut_edges;
      j["total_edges"] = res.total_edges;
      j["fraction"] = res.fraction;
    } else if (k == "resilience") {
      if (t == nullptr) throw std::invalid_argument("topology required");
      int runs = static_cast<int>(get_int(p, "runs", 100));
      int step = static_cast<int>(get_int(p, "step", 1));
      std::uint64_t seed = static_cast<std::uint64_t>(get_int(p, "seed", 1));
      json all_runs = json::array();
      for (int r = 0; r < runs; ++r) {
        auto trace = resilience_run(t->er.g, seed + static_cast<std::uint64_t>(r),
                                    step);
        json steps = json::array();
        for (const auto& st : trace)
          steps.push_back({{"failed_fraction", st.failed_fraction},
                           {"diameter", st.diameter},
                           {"avg_shortest_path", st.avg_shortest_path}});
        all_runs.push_back(steps);
      }
      j["runs"] = all_runs;
    } else {
      return fail(PF_ERR_INVALID_ARGUMENT, "unknown analysis kind: " + k);
    }
    *out = dup_string(j.dump(2));
    return PF_OK;
  });
}

}  // extern "C"
