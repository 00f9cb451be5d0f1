// Command-line front end; all functionality goes through the C API in
// polarfly.h. Exit codes: 0 success, 1 verification failure, 2 usage or
// config error.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polarfly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int api_exit(pf_status st) {
  std::cerr << "error: " << pf_last_error() << "\n";
  return st == PF_ERR_VERIFICATION_FAILED ? kExitVerifyFail : kExitUsage;
}

int emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

struct Topology {
  pf_topology* handle = nullptr;
  ~Topology() { pf_topology_destroy(handle); }
};

int open_topology(int q, const std::string& in_path, Topology& topo) {
  if (!in_path.empty()) {
    std::ifstream f(in_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read " << in_path << "\n";
      return kExitUsage;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    pf_status st = pf_topology_from_edge_list(ss.str().c_str(), &topo.handle);
    if (st != PF_OK) return api_exit(st);
    return kExitOk;
  }
  pf_status st = pf_topology_create(q, &topo.handle);
  if (st != PF_OK) return api_exit(st);
  return kExitOk;
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { pf_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PolarFly topology toolkit"};
  app.require_subcommand(1);
  // let --q/--seed/... appear after the subcommand name
  app.fallthrough();

  int q = 7;
  int p_endpoints = 1;
  std::uint64_t seed = 1;
  std::string out_path, format = "edgelist", in_path;
  app.add_option("--q", q, "field order (prime power)")->capture_default_str();
  app.add_option("--p-endpoints", p_endpoints, "endpoints per router")
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format");
  app.add_option("--in", in_path, "read topology from an edge-list file");

  auto* generate = app.add_subcommand("generate", "construct the topology");

  int starter = -1;
  auto* verify = app.add_subcommand("verify", "run the structural check suite");
  verify->add_option("--starter", starter, "starter quadric vertex ID");

  auto* layout = app.add_subcommand("layout", "cluster layout and triangles");
  layout->add_option("--starter", starter, "starter quadric vertex ID");

  std::string method = "quadric";
  int replications = 1;
  auto* expand = app.add_subcommand("expand", "replicate clusters");
  expand->add_option("--method", method, "quadric | nonquadric")
      ->capture_default_str();
  expand->add_option("--n", replications, "number of replications")
      ->capture_default_str();

  int src = 0, dst = 1;
  std::string policy = "min";
  auto* route = app.add_subcommand("route", "one-shot route query");
  route->add_option("--src", src, "source vertex")->required();
  route->add_option("--dst", dst, "destination vertex")->required();
  route->add_option("--policy", policy, "min | valiant | compact")
      ->capture_default_str();

  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "flit-level load sweep");
  simulate->add_option("--config", config_path, "JSON config file")->required();

  std::string kind = "moore";
  std::string params = "{}";
  auto* analyze = app.add_subcommand("analyze", "graph-level analyses");
  analyze->add_option("--kind", kind, "moore | bisection | resilience")
      ->capture_default_str();
  analyze->add_option("--params", params, "JSON parameter object")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (generate->parsed()) {
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString text;
    pf_status st = pf_topology_render(topo.handle, format.c_str(), &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  if (verify->parsed()) {
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString report;
    int passed = 0;
    pf_status st = pf_verify(topo.handle, starter, &report.s, &passed);
    if (st != PF_OK) return api_exit(st);
    int rc = emit(report.s, out_path);
    if (rc != kExitOk) return rc;
    return passed ? kExitOk : kExitVerifyFail;
  }

  if (layout->parsed()) {
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString text;
    pf_status st = pf_layout(topo.handle, starter, &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  if (expand->parsed()) {
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString text;
    std::string fmt = format == "edgelist" || format == "json" ? format : "edgelist";
    pf_status st = pf_expand(topo.handle, method.c_str(), replications,
                             fmt.c_str(), &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  if (route->parsed()) {
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString text;
    pf_status st =
        pf_route(topo.handle, src, dst, policy.c_str(), seed, &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  if (simulate->parsed()) {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read " << config_path << "\n";
      return kExitUsage;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    std::string cfg = ss.str();
    Topology topo;
    if (int rc = open_topology(q, in_path, topo)) return rc;
    OwnedString text;
    pf_status st = pf_simulate(topo.handle, cfg.c_str(), &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  if (analyze->parsed()) {
    Topology topo;
    if (kind != "moore") {
      if (int rc = open_topology(q, in_path, topo)) return rc;
    }
    OwnedString text;
    pf_status st =
        pf_analyze(topo.handle, kind.c_str(), params.c_str(), &text.s);
    if (st != PF_OK) return api_exit(st);
    return emit(text.s, out_path);
  }

  return kExitUsage;
}
