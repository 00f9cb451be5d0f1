#include "polarfly/io.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>

namespace polarfly {

using nlohmann::json;

void write_edge_list(std::ostream& os, const ErGraph& er) {
  os << "# polarfly edge list\n";
  os << "# q " << er.q << "\n";
  os << "# p " << er.field.p() << "\n";
  os << "# m " << er.field.m() << "\n";
  if (!er.field.modulus().empty()) {
    os << "# modulus";
    for (int c : er.field.modulus()) os << ' ' << c;
    os << "\n";
  }
  os << "# vertices " << er.n()
     << " ordered lexicographically by left-normalized (x,y,z)\n";
  for (auto [u, v] : er.g.edges()) os << u << ' ' << v << '\n';
}

std::string edge_list_string(const ErGraph& er) {
  std::ostringstream ss;
  write_edge_list(ss, er);
  return ss.str();
}

ErGraph read_edge_list(std::istream& is) {
  int q = -1;
  std::string line;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      if (key == "q") hs >> q;
      continue;
    }
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw IoError("malformed edge line: " + line);
    edges.emplace_back(u, v);
  }
  if (q < 2) throw IoError("missing or invalid '# q' header");
  // Rebuild vertex identities from q, then take the file's edges.
  ErGraph er = build_er(q);
  Graph g(er.n());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= er.n() || v >= er.n() || u == v)
      throw IoError("edge endpoint out of range");
    g.add_edge(u, v);
  }
  g.finalize();
  er.g = std::move(g);
  return er;
}

void write_dot(std::ostream& os, const ErGraph& er) {
  os << "graph er_" << er.q << " {\n";
  os << "  node [style=filled];\n";
  for (int v = 0; v < er.n(); ++v) {
    const char* color = er.cls[v] == VClass::W    ? "red"
                        : er.cls[v] == VClass::V1 ? "green"
                                                  : "blue";
    os << "  " << v << " [fillcolor=" << color << "];\n";
  }
  for (auto [u, v] : er.g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

namespace {

json point_json(const FieldSpec& f, const ProjectivePoint& p) {
  (void)f;
  return json::array({p.v[0], p.v[1], p.v[2]});
}

const char* class_name(VClass c) {
  switch (c) {
    case VClass::W: return "W";
    case VClass::V1: return "V1";
    default: return "V2";
  }
}

}  // namespace

std::string graph_json(const ErGraph& er) {
  json j;
  j["q"] = er.q;
  j["p"] = er.field.p();
  j["m"] = er.field.m();
  j["modulus"] = er.field.modulus();
  j["n"] = er.n();
  json verts = json::array();
  for (int v = 0; v < er.n(); ++v) {
    verts.push_back({{"id", v},
                     {"point", point_json(er.field, er.points[v])},
                     {"class", class_name(er.cls[v])},
                     {"self_loop", static_cast<bool>(er.self_loop[v])}});
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : er.g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j.dump(2);
}

std::string layout_json(const ErGraph& er, const ClusterLayout& layout,
                        const std::vector<TriangleRecord>& triangles) {
  (void)er;
  json j;
  j["starter"] = layout.starter;
  j["clusters"] = layout.clusters;
  j["centers"] = layout.centers;
  json tris = json::array();
  for (const auto& t : triangles) {
    json tj;
    tj["vertices"] = t.vertices;
    tj["v2_count"] = t.v2_count;
    if (t.internal) {
      tj["kind"] = "internal";
      tj["cluster"] = t.cluster;
    } else {
      tj["kind"] = "inter";
      tj["cluster_triple"] = t.cluster_triple;
    }
    tris.push_back(tj);
  }
  j["triangles"] = tris;
  return j.dump(2);
}

std::string expanded_json(const ErGraph& er, const ExpandedGraph& ex) {
  json j;
  j["q"] = er.q;
  j["base_n"] = ex.base_n;
  j["n"] = ex.g.n;
  j["method"] = ex.method == ExpansionMethod::QuadricReplication
                    ? "quadric"
                    : "nonquadric";
  json reps = json::array();
  for (const auto& rc : ex.added_clusters) {
    reps.push_back({{"replica_of", rc.source_cluster},
                    {"source_vertices", rc.source_vertices},
                    {"vertex_ids", rc.vertex_ids}});
  }
  j["added_clusters"] = reps;
  json edges = json::array();
  for (auto [u, v] : ex.g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j.dump(2);
}

std::string expanded_edge_list(const ErGraph& er, const ExpandedGraph& ex) {
  std::ostringstream os;
  os << "# polarfly expanded edge list\n";
  os << "# q " << er.q << "\n";
  os << "# base_n " << ex.base_n << "\n";
  os << "# method "
     << (ex.method == ExpansionMethod::QuadricReplication ? "quadric"
                                                          : "nonquadric")
     << "\n";
  for (auto [u, v] : ex.g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace polarfly
