#include "polarfly/ergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polarfly {

int ErGraph::vertex_of(const ProjectivePoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p))
    throw std::invalid_argument("point not in graph");
  return static_cast<int>(it - points.begin());
}

std::vector<int> ErGraph::quadrics() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (cls[v] == VClass::W) out.push_back(v);
  return out;
}

namespace {

void assign_classes(ErGraph& er) {
  const int n = er.n();
  er.cls.assign(n, VClass::V2);
  er.self_loop.assign(n, false);
  for (int v = 0; v < n; ++v)
    if (is_quadric(er.field, er.points[v])) {
      er.cls[v] = VClass::W;
      er.self_loop[v] = true;
    }
  // V1 = non-quadrics with a quadric neighbor; classification is by
  // adjacency, not coordinate formulas.
  for (int v = 0; v < n; ++v) {
    if (er.cls[v] == VClass::W) continue;
    for (int u : er.g.adj[v])
      if (er.cls[u] == VClass::W) {
        er.cls[v] = VClass::V1;
        break;
      }
  }
}

}  // namespace

ErGraph build_er(const FieldSpec& spec) {
  ErGraph er;
  er.field = spec;
  er.q = spec.q();
  er.points = enumerate_points(spec);
  const int n = static_cast<int>(er.points.size());
  er.g = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dot(spec, er.points[u], er.points[v]) == 0) er.g.add_edge(u, v);
  er.g.finalize();
  assign_classes(er);
  return er;
}

ErGraph build_er(int q) {
  int p = 0, m = 0;
  if (!is_prime_power(q, &p, &m))
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return build_er(FieldSpec::make(p, m));
}

Graph build_bipartite_incidence(const FieldSpec& spec) {
  auto pts = enumerate_points(spec);
  const int n = static_cast<int>(pts.size());
  Graph b(2 * n);
  // Point i lies on the line dual to p_j iff p_i . p_j = 0; this covers
  // all lines because the dual map is a bijection.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dot(spec, pts[i], pts[j]) == 0) b.add_edge(i, n + j);
  b.finalize();
  return b;
}

ErGraph build_er_via_polarity(const FieldSpec& spec) {
  auto pts = enumerate_points(spec);
  const int n = static_cast<int>(pts.size());
  Graph b = build_bipartite_incidence(spec);

  ErGraph er;
  er.field = spec;
  er.q = spec.q();
  er.points = pts;
  er.g = Graph(n);
  // Glue line vertex n+j onto point vertex j. An edge (i, n+j) of B(q)
  // becomes (i, j); i = j turns into the quadric self-loop.
  for (int i = 0; i < n; ++i)
    for (int v : b.adj[i]) {
      int j = v - n;
      if (j > i) er.g.add_edge(i, j);
    }
  er.g.finalize();
  assign_classes(er);
  return er;
}

bool Property1Report::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.pass; });
}

Property1Report verify_property1(const ErGraph& er) {
  const int q = er.q;
  if (q % 2 == 0) throw OddQRequiredError(q);
  const int n = er.n();
  Property1Report report;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.clauses.push_back({name, pass, detail});
  };

  // Clause 1: quadrics independent, each adjacent to exactly q V1 vertices.
  {
    bool ok = true;
    std::ostringstream why;
    for (int v = 0; v < n && ok; ++v) {
      if (er.cls[v] != VClass::W) continue;
      int v1_neighbors = 0;
      for (int u : er.g.adj[v]) {
        if (er.cls[u] == VClass::W) {
          ok = false;
          why << "quadrics " << v << " and " << u << " adjacent";
          break;
        }
        if (er.cls[u] == VClass::V1) ++v1_neighbors;
      }
      if (ok && v1_neighbors != q) {
        ok = false;
        why << "quadric " << v << " has " << v1_neighbors << " V1 neighbors";
      }
    }
    add("quadrics_independent_degree_q", ok, why.str());
  }

  // Clause 2: V1 vertices: 2 quadric, (q-1)/2 V1, (q-1)/2 V2 neighbors.
  // Clause 3: V2 vertices: (q+1)/2 V1, (q+1)/2 V2 neighbors.
  {
    bool ok2 = true, ok3 = true;
    std::ostringstream why2, why3;
    for (int v = 0; v < n; ++v) {
      if (er.cls[v] == VClass::W) continue;
      int w = 0, v1 = 0, v2 = 0;
      for (int u : er.g.adj[v]) {
        switch (er.cls[u]) {
          case VClass::W: ++w; break;
          case VClass::V1: ++v1; break;
          case VClass::V2: ++v2; break;
        }
      }
      if (er.cls[v] == VClass::V1) {
        if (ok2 && !(w == 2 && v1 == (q - 1) / 2 && v2 == (q - 1) / 2)) {
          ok2 = false;
          why2 << "V1 vertex " << v << " split " << w << "/" << v1 << "/" << v2;
        }
      } else {
        if (ok3 && !(w == 0 && v1 == (q + 1) / 2 && v2 == (q + 1) / 2)) {
          ok3 = false;
          why3 << "V2 vertex " << v << " split " << w << "/" << v1 << "/" << v2;
        }
      }
    }
    add("v1_neighborhood_split", ok2, why2.str());
    add("v2_neighborhood_split", ok3, why3.str());
  }

  // Clause 4: exactly one 2-path between every vertex pair, counting the
  // quadric self-loop as an edge for adjacent pairs.
  {
    bool ok = true;
    std::ostringstream why;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        int common = 0;
        const auto& a = er.g.adj[u];
        const auto& b = er.g.adj[v];
        for (size_t i = 0, j = 0; i < a.size() && j < b.size();) {
          if (a[i] < b[j]) ++i;
          else if (a[i] > b[j]) ++j;
          else { ++common; ++i; ++j; }
        }
        int two_paths = common;
        if (er.g.has_edge(u, v)) {
          if (er.self_loop[u]) ++two_paths;
          if (er.self_loop[v]) ++two_paths;
        }
        if (two_paths != 1) {
          ok = false;
          why << "pair (" << u << "," << v << ") has " << two_paths << " 2-paths";
        }
      }
    }
    add("unique_two_path", ok, why.str());
  }

  // Clause 5: quadric-incident edges in 0 triangles, others in exactly 1.
  {
    bool ok = true;
    std::ostringstream why;
    for (auto [u, v] : er.g.edges()) {
      int common = 0;
      for (int x : er.g.adj[u])
        if (x != v && er.g.has_edge(x, v)) ++common;
      bool quad_edge = er.cls[u] == VClass::W || er.cls[v] == VClass::W;
      int expect = quad_edge ? 0 : 1;
      if (common != expect) {
        ok = false;
        why << "edge (" << u << "," << v << ") in " << common << " triangles";
        break;
      }
    }
    add("edge_triangle_participation", ok, why.str());
  }

  return report;
}

}  // namespace polarfly
