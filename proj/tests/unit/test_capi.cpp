#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstring>
#include <string>

#include "polarfly.h"

using nlohmann::json;

namespace {

struct Topo {
  pf_topology* t = nullptr;
  explicit Topo(int q) { REQUIRE(pf_topology_create(q, &t) == PF_OK); }
  ~Topo() { pf_topology_destroy(t); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  pf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("create exposes basic counts") {
  Topo t(7);
  CHECK(pf_topology_q(t.t) == 7);
  CHECK(pf_topology_vertex_count(t.t) == 57);
  // 57 * (q+1) minus the q+1 loop-suppressed quadric degrees, halved
  CHECK(pf_topology_edge_count(t.t) == (57 * 8 - 8) / 2);
}

TEST_CASE("invalid q is rejected with a message") {
  pf_topology* t = nullptr;
  CHECK(pf_topology_create(6, &t) == PF_ERR_INVALID_ARGUMENT);
  CHECK(t == nullptr);
  CHECK(std::strlen(pf_last_error()) > 0);
}

TEST_CASE("render round trips through the edge list parser") {
  Topo t(9);
  char* text = nullptr;
  REQUIRE(pf_topology_render(t.t, "edgelist", &text) == PF_OK);
  std::string el = take(text);

  pf_topology* back = nullptr;
  REQUIRE(pf_topology_from_edge_list(el.c_str(), &back) == PF_OK);
  CHECK(pf_topology_q(back) == 9);
  CHECK(pf_topology_vertex_count(back) == 91);
  CHECK(pf_topology_edge_count(back) == pf_topology_edge_count(t.t));
  pf_topology_destroy(back);

  pf_topology* bad = nullptr;
  CHECK(pf_topology_from_edge_list("0 1\n", &bad) == PF_ERR_IO);
}

TEST_CASE("render covers every format and rejects unknown ones") {
  Topo t(3);
  for (const char* fmt : {"edgelist", "dot", "json"}) {
    char* out = nullptr;
    REQUIRE(pf_topology_render(t.t, fmt, &out) == PF_OK);
    CHECK(!take(out).empty());
  }
  char* out = nullptr;
  CHECK(pf_topology_render(t.t, "yaml", &out) == PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification passes for q=7 and reports named checks") {
  Topo t(7);
  char* report = nullptr;
  int passed = 0;
  REQUIRE(pf_verify(t.t, -1, &report, &passed) == PF_OK);
  CHECK(passed == 1);
  json j = json::parse(take(report));
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].is_array());
  bool saw_degrees = false;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    if (c["name"] == "degrees") saw_degrees = true;
  }
  CHECK(saw_degrees);
}

TEST_CASE("layout and expand emit well formed documents") {
  Topo t(5);
  char* out = nullptr;
  REQUIRE(pf_layout(t.t, -1, &out) == PF_OK);
  json lay = json::parse(take(out));
  CHECK(lay["clusters"].size() == 6);

  REQUIRE(pf_expand(t.t, "nonquadric", 2, "json", &out) == PF_OK);
  json ex = json::parse(take(out));
  CHECK(ex["n"] == 31 + 2 * 5);

  CHECK(pf_expand(t.t, "sideways", 1, "json", &out) == PF_ERR_INVALID_ARGUMENT);
  CHECK(pf_expand(t.t, "nonquadric", 99, "json", &out) ==
        PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("route returns the hop sequence") {
  Topo t(5);
  char* out = nullptr;
  REQUIRE(pf_route(t.t, 0, 7, "min", 1, &out) == PF_OK);
  json j = json::parse(take(out));
  CHECK(j["src"] == 0);
  CHECK(j["dst"] == 7);
  CHECK(j["hops"].size() == j["length"].get<int>() + 1);

  CHECK(pf_route(t.t, 0, 99, "min", 1, &out) == PF_ERR_INVALID_ARGUMENT);
  CHECK(pf_route(t.t, 0, 7, "scenic", 1, &out) == PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("simulate produces a byte stable CSV curve") {
  Topo t(7);
  const char* cfg = R"({
    "p_endpoints": 2, "traffic": "uniform", "routing": "min",
    "warmup_cycles": 500, "measure_cycles": 2000, "seed": 3,
    "rates": [0.05, 0.2]
  })";
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(pf_simulate(t.t, cfg, &a) == PF_OK);
  REQUIRE(pf_simulate(t.t, cfg, &b) == PF_OK);
  std::string csv = take(a);
  CHECK(csv == take(b));
  CHECK(csv.rfind("offered_load,", 0) == 0);
  CHECK(csv.find("# saturation_rate") != std::string::npos);
}

TEST_CASE("simulate config errors name the offending key") {
  Topo t(5);
  char* out = nullptr;
  CHECK(pf_simulate(t.t, R"({"rates": [0.1]})", &out) ==
        PF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(pf_last_error()).find("traffic") != std::string::npos);

  CHECK(pf_simulate(t.t, R"({"traffic": "uniform"})", &out) ==
        PF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(pf_last_error()).find("rates") != std::string::npos);

  CHECK(pf_simulate(t.t,
                    R"({"traffic": "uniform", "rates": [0.3, 0.1]})",
                    &out) == PF_ERR_INVALID_ARGUMENT);
  CHECK(pf_simulate(t.t, "not json", &out) == PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("analyze kinds return their documents") {
  Topo t(13);
  char* out = nullptr;
  REQUIRE(pf_analyze(nullptr, "moore", R"({"k_min": 30, "k_max": 34})", &out) ==
          PF_OK);
  json moore = json::parse(take(out));
  bool saw_q31 = false;
  for (const auto& row : moore["radixes"])
    if (row["q"] == 31) {
      saw_q31 = true;
      CHECK(row["n"] == 993);
      CHECK(row["moore_bound"] == 1025);
    }
  CHECK(saw_q31);

  REQUIRE(pf_analyze(t.t, "bisection", R"({"restarts": 4, "seed": 1})", &out) ==
          PF_OK);
  json bis = json::parse(take(out));
  CHECK(bis["fraction"].get<double>() > 0.3);

  REQUIRE(pf_analyze(t.t, "resilience", R"({"runs": 2, "step": 40})", &out) ==
          PF_OK);
  json res = json::parse(take(out));
  CHECK(res["runs"].size() == 2);

  CHECK(pf_analyze(t.t, "astrology", "{}", &out) == PF_ERR_INVALID_ARGUMENT);
  CHECK(pf_analyze(nullptr, "bisection", "{}", &out) ==
        PF_ERR_INVALID_ARGUMENT);
}
