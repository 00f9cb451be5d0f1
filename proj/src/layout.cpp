#include "polarfly/layout.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polarfly {

ClusterLayout build_layout(const ErGraph& er, int starter) {
  if (er.q % 2 == 0) throw OddQRequiredError(er.q);
  if (starter < 0 || starter >= er.n() || er.cls[starter] != VClass::W)
    throw NotQuadricError(starter);

  ClusterLayout layout;
  layout.starter = starter;
  layout.cluster_of.assign(er.n(), -1);

  layout.clusters.emplace_back();
  layout.centers.push_back(-1);
  for (int v = 0; v < er.n(); ++v)
    if (er.cls[v] == VClass::W) {
      layout.clusters[0].push_back(v);
      layout.cluster_of[v] = 0;
    }

  // Neighbors of the starter in vertex-ID order become the centers; each
  // cluster is its center plus the center's non-quadric neighbors.
  for (int c : er.g.adj[starter]) {
    int idx = layout.num_clusters();
    layout.clusters.emplace_back();
    layout.centers.push_back(c);
    auto& members = layout.clusters.back();
    members.push_back(c);
    layout.cluster_of[c] = idx;
    for (int u : er.g.adj[c]) {
      if (er.cls[u] == VClass::W) continue;
      members.push_back(u);
      layout.cluster_of[u] = idx;
    }
    std::sort(members.begin(), members.end());
  }
  return layout;
}

ClusterLayout build_layout(const ErGraph& er) {
  for (int v = 0; v < er.n(); ++v)
    if (er.cls[v] == VClass::W) return build_layout(er, v);
  throw std::logic_error("graph has no quadric");
}

bool LayoutReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClauseResult& c) { return c.pass; });
}

LayoutReport verify_intra(const ErGraph& er, const ClusterLayout& layout) {
  const int q = er.q;
  LayoutReport report;
  auto add = [&](const std::string& name, bool pass, const std::string& why) {
    report.checks.push_back({name, pass, why});
  };

  {
    bool ok = true;
    std::ostringstream why;
    for (int u : layout.clusters[0])
      for (int v : layout.clusters[0])
        if (u < v && er.g.has_edge(u, v)) {
          ok = false;
          why << "edge inside C0: (" << u << "," << v << ")";
        }
    add("c0_edge_free", ok, why.str());
  }

  bool ok = true;
  std::ostringstream why;
  for (int i = 1; i < layout.num_clusters() && ok; ++i) {
    const auto& members = layout.clusters[i];
    int center = layout.centers[i];
    if (static_cast<int>(members.size()) != q) {
      ok = false;
      why << "cluster " << i << " has " << members.size() << " vertices";
      break;
    }
    // Center adjacent to every other member; every non-center member has
    // exactly one non-center neighbor inside the cluster (its blade
    // partner). That is precisely the fan of (q-1)/2 triangles.
    int matching_edges = 0;
    for (int u : members) {
      if (u == center) continue;
      if (!er.g.has_edge(center, u)) {
        ok = false;
        why << "center " << center << " not adjacent to member " << u;
        break;
      }
      int partners = 0;
      for (int v : members)
        if (v != center && v != u && er.g.has_edge(u, v)) ++partners;
      if (partners != 1) {
        ok = false;
        why << "member " << u << " has " << partners << " non-center partners";
        break;
      }
      ++matching_edges;
    }
    if (ok && matching_edges != q - 1) {
      ok = false;
      why << "cluster " << i << " blade count mismatch";
    }
  }
  add("fan_of_triangles", ok, why.str());
  return report;
}

LayoutReport verify_inter(const ErGraph& er, const ClusterLayout& layout) {
  const int q = er.q;
  LayoutReport report;
  auto add = [&](const std::string& name, bool pass, const std::string& why) {
    report.checks.push_back({name, pass, why});
  };

  // Prop 3: every V1 vertex has exactly 2 quadric neighbors; q+1 edges
  // between each non-quadric cluster and C0; each quadric has exactly one
  // neighbor per non-quadric cluster.
  {
    bool ok = true;
    std::ostringstream why;
    for (int v = 0; v < er.n() && ok; ++v) {
      if (er.cls[v] != VClass::V1) continue;
      int wdeg = 0;
      for (int u : er.g.adj[v])
        if (er.cls[u] == VClass::W) ++wdeg;
      if (wdeg != 2) {
        ok = false;
        why << "V1 vertex " << v << " has " << wdeg << " quadric neighbors";
      }
    }
    add("v1_two_quadric_neighbors", ok, why.str());
  }
  {
    bool ok = true;
    std::ostringstream why;
    for (int i = 1; i < layout.num_clusters() && ok; ++i) {
      int edges_to_c0 = 0;
      for (int v : layout.clusters[i])
        for (int u : er.g.adj[v])
          if (layout.cluster_of[u] == 0) ++edges_to_c0;
      if (edges_to_c0 != q + 1) {
        ok = false;
        why << "cluster " << i << " has " << edges_to_c0 << " edges to C0";
      }
      for (int w : layout.clusters[0]) {
        int cnt = 0;
        for (int u : er.g.adj[w])
          if (layout.cluster_of[u] == i) ++cnt;
        if (cnt != 1) {
          ok = false;
          why << "quadric " << w << " has " << cnt << " neighbors in cluster " << i;
          break;
        }
      }
    }
    add("c0_cluster_links", ok, why.str());
  }

  // Prop 4: q-2 pairwise non-incident edges between non-quadric cluster
  // pairs; each V2 vertex one neighbor per other cluster; exactly one
  // non-center V1 vertex u' with no edge to C_j, sharing a quadric
  // neighbor with c_j.
  {
    bool ok = true;
    std::ostringstream why;
    for (int i = 1; i < layout.num_clusters() && ok; ++i) {
      for (int j = 1; j < layout.num_clusters() && ok; ++j) {
        if (i == j) continue;
        std::vector<std::pair<int, int>> cross_edges;
        for (int u : layout.clusters[i])
          for (int v : er.g.adj[u])
            if (layout.cluster_of[v] == j) cross_edges.emplace_back(u, v);
        if (i < j) {
          if (static_cast<int>(cross_edges.size()) != q - 2) {
            ok = false;
            why << "clusters (" << i << "," << j << ") joined by "
                << cross_edges.size() << " edges";
            break;
          }
          std::set<int> touched;
          for (auto [u, v] : cross_edges) {
            if (!touched.insert(u).second || !touched.insert(v).second) {
              ok = false;
              why << "edges between clusters (" << i << "," << j
                  << ") are not independent";
              break;
            }
          }
        }
        // per-vertex counts and the u' vertex, as seen from cluster i
        int uprime = -1;
        for (int u : layout.clusters[i]) {
          int cnt = 0;
          for (auto [a, b] : cross_edges)
            if (a == u) ++cnt;
          if (er.cls[u] == VClass::V2 && cnt != 1) {
            ok = false;
            why << "V2 vertex " << u << " has " << cnt << " neighbors in cluster " << j;
            break;
          }
          if (er.cls[u] == VClass::V1 && u != layout.centers[i] && cnt == 0) {
            if (uprime >= 0) {
              ok = false;
              why << "multiple u' candidates between clusters " << i << "," << j;
              break;
            }
            uprime = u;
          }
        }
        if (!ok) break;
        if (uprime < 0) {
          ok = false;
          why << "no u' vertex between clusters " << i << "," << j;
          break;
        }
        // u' shares a quadric neighbor with the center of C_j
        int cj = layout.centers[j];
        bool shares = false;
        for (int w : er.g.adj[uprime]) {
          if (er.cls[w] != VClass::W) continue;
          if (er.g.has_edge(w, cj)) shares = true;
        }
        if (!shares) {
          ok = false;
          why << "u'=" << uprime << " shares no quadric neighbor with center of "
              << j;
        }
      }
    }
    add("independent_cross_edges_and_uprime", ok, why.str());
  }
  return report;
}

std::vector<TriangleRecord> enumerate_triangles(const ErGraph& er,
                                                const ClusterLayout& layout) {
  std::set<std::array<int, 3>> seen;
  std::vector<TriangleRecord> out;
  for (auto [u, v] : er.g.edges()) {
    if (er.cls[u] == VClass::W || er.cls[v] == VClass::W) continue;
    // Unique triangle through a non-quadric edge: third vertex is the
    // cross-product midpoint.
    ProjectivePoint mid = cross(er.field, er.points[u], er.points[v]);
    int x = er.vertex_of(mid);
    std::array<int, 3> tri{u, v, x};
    std::sort(tri.begin(), tri.end());
    if (!seen.insert(tri).second) continue;

    TriangleRecord rec;
    rec.vertices = tri;
    for (int w : tri)
      if (er.cls[w] == VClass::V2) ++rec.v2_count;
    int c0 = layout.cluster_of[tri[0]];
    int c1 = layout.cluster_of[tri[1]];
    int c2 = layout.cluster_of[tri[2]];
    if (c0 == c1 && c1 == c2) {
      rec.internal = true;
      rec.cluster = c0;
    } else {
      rec.cluster_triple = {c0, c1, c2};
      std::sort(rec.cluster_triple.begin(), rec.cluster_triple.end());
    }
    out.push_back(rec);
  }
  return out;
}

LayoutReport verify_block_design(const ErGraph& er, const ClusterLayout& layout,
                                 const std::vector<TriangleRecord>& triangles) {
  (void)er;
  LayoutReport report;
  bool ok = true;
  std::ostringstream why;
  std::map<std::array<int, 3>, int> per_triple;
  for (const auto& t : triangles) {
    if (t.internal) continue;
    auto [a, b, c] = t.cluster_triple;
    if (a == b || b == c || a == 0) {
      ok = false;
      why << "inter-cluster triangle does not span three non-quadric clusters";
      break;
    }
    ++per_triple[t.cluster_triple];
  }
  if (ok) {
    const int q = layout.num_clusters() - 1;
    long long expect = static_cast<long long>(q) * (q - 1) * (q - 2) / 6;
    if (static_cast<long long>(per_triple.size()) != expect) {
      ok = false;
      why << per_triple.size() << " cluster triples joined, expected " << expect;
    }
    for (auto& [triple, count] : per_triple)
      if (count != 1) {
        ok = false;
        why << "cluster triple joined by " << count << " triangles";
        break;
      }
  }
  report.checks.push_back({"block_design", ok, why.str()});
  return report;
}

std::array<long long, 4> triangle_distribution(
    const std::vector<TriangleRecord>& triangles) {
  std::array<long long, 4> counts{0, 0, 0, 0};
  for (const auto& t : triangles)
    if (!t.internal) ++counts[t.v2_count];
  return counts;
}

std::array<long long, 4> expected_triangle_distribution(int q) {
  std::array<long long, 4> counts{0, 0, 0, 0};
  long long Q = q;
  if (q % 4 == 1) {
    counts[0] = Q * (Q - 1) * (Q - 5) / 24;  // (v1,v1,v1)
    counts[2] = Q * (Q - 1) * (Q - 1) / 8;   // (v1,v2,v2)
  } else {
    counts[1] = Q * (Q - 1) * (Q - 3) / 8;        // (v1,v1,v2)
    counts[3] = (Q + 1) * Q * (Q - 1) / 24;        // (v2,v2,v2)
  }
  return counts;
}

VClass intermediate_type(const ErGraph& er, int u, int v) {
  if (er.cls[u] == VClass::W || er.cls[v] == VClass::W)
    throw NoAlternatePathError();
  if (!er.g.has_edge(u, v))
    throw std::invalid_argument("vertices are not adjacent");
  ProjectivePoint mid = cross(er.field, er.points[u], er.points[v]);
  return er.cls[er.vertex_of(mid)];
}

}  // namespace polarfly
