#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "polarfly/io.hpp"

using namespace polarfly;
using nlohmann::json;

TEST_CASE("edge list round trips including extension fields") {
  for (int q : {5, 9}) {
    ErGraph er = build_er(q);
    std::string text = edge_list_string(er);
    std::istringstream in(text);
    ErGraph back = read_edge_list(in);
    CHECK(back.q == q);
    CHECK(back.n() == er.n());
    CHECK(back.g.edges() == er.g.edges());
    CHECK(back.cls == er.cls);
    CHECK(back.self_loop == er.self_loop);
  }
}

TEST_CASE("edge list carries the field description") {
  ErGraph er = build_er(9);
  std::string text = edge_list_string(er);
  CHECK(text.find("# q 9") != std::string::npos);
  CHECK(text.find("# p 3") != std::string::npos);
  CHECK(text.find("# m 2") != std::string::npos);
  CHECK(text.find("# modulus 1 0 1") != std::string::npos);
}

TEST_CASE("malformed edge lists are rejected") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), IoError);
  };
  reject("0 1\n1 2\n");                    // no q header
  reject("# q 5\n0 one\n");                // non-numeric endpoint
  reject("# q 5\n0 99\n");                 // endpoint out of range
  reject("# q 5\n3 3\n");                  // loop in edge section
  reject("# q 1\n");                       // q below any valid field
}

TEST_CASE("dot output colors every vertex and lists every edge") {
  ErGraph er = build_er(3);
  std::ostringstream os;
  write_dot(os, er);
  std::string dot = os.str();
  CHECK(dot.rfind("graph er_3 {", 0) == 0);
  CHECK(dot.find("fillcolor=red") != std::string::npos);
  CHECK(dot.find("fillcolor=green") != std::string::npos);
  size_t edge_lines = 0;
  for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos)
    ++edge_lines;
  CHECK(edge_lines == er.g.edges().size());
}

TEST_CASE("graph json exposes points, classes and loops") {
  ErGraph er = build_er(5);
  json j = json::parse(graph_json(er));
  CHECK(j["q"] == 5);
  CHECK(j["p"] == 5);
  CHECK(j["n"] == 31);
  REQUIRE(j["vertices"].size() == 31);
  int loops = 0, w = 0;
  for (const auto& v : j["vertices"]) {
    REQUIRE(v["point"].size() == 3);
    if (v["self_loop"].get<bool>()) ++loops;
    if (v["class"] == "W") ++w;
  }
  CHECK(w == 6);
  CHECK(loops == 6);
  CHECK(j["edges"].size() == er.g.edges().size());
}

TEST_CASE("layout json mirrors the cluster structure") {
  ErGraph er = build_er(5);
  ClusterLayout lay = build_layout(er);
  auto tris = enumerate_triangles(er, lay);
  json j = json::parse(layout_json(er, lay, tris));
  CHECK(j["starter"] == lay.starter);
  REQUIRE(j["clusters"].size() == 6);
  CHECK(j["triangles"].size() == tris.size());
  for (const auto& t : j["triangles"]) {
    REQUIRE(t["vertices"].size() == 3);
    if (t["kind"] == "internal")
      CHECK(t.contains("cluster"));
    else
      CHECK(t["cluster_triple"].size() == 3);
  }
}

TEST_CASE("expanded outputs agree with the expanded graph") {
  ErGraph er = build_er(5);
  ClusterLayout lay = build_layout(er);
  ExpandedGraph ex = expand_nonquadric(er, lay, 2);
  json j = json::parse(expanded_json(er, ex));
  CHECK(j["method"] == "nonquadric");
  CHECK(j["base_n"] == er.n());
  CHECK(j["n"] == ex.g.n);
  CHECK(j["added_clusters"].size() == 2);
  CHECK(j["edges"].size() == ex.g.edges().size());

  std::string el = expanded_edge_list(er, ex);
  CHECK(el.find("# method nonquadric") != std::string::npos);
  size_t lines = 0;
  std::istringstream in(el);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ++lines;
  CHECK(lines == ex.g.edges().size());
}

TEST_CASE("json serialization is byte stable") {
  ErGraph er = build_er(7);
  CHECK(graph_json(er) == graph_json(er));
  CHECK(edge_list_string(er) == edge_list_string(er));
}
