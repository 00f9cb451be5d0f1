#ifndef POLARFLY_LAYOUT_HPP
#define POLARFLY_LAYOUT_HPP

#include <array>
#include <map>
#include <vector>

#include "polarfly/ergraph.hpp"

namespace polarfly {

/// Cluster assignment of ER_q: C_0 holds the q+1 quadrics, and each of
/// the q non-quadric clusters is a center (a neighbor of the starter
/// quadric) together with its non-quadric neighbors.
struct ClusterLayout {
  int starter = -1;                       // the chosen quadric
  std::vector<std::vector<int>> clusters; // clusters[0] = quadrics
  std::vector<int> centers;               // centers[i] for cluster i >= 1; centers[0] = -1
  std::vector<int> cluster_of;            // per-vertex cluster index

  int num_clusters() const { return static_cast<int>(clusters.size()); }
};

/// Triangle shape: number of V2 vertices among its corners (0..3).
/// Quadrics never appear in triangles.
struct TriangleRecord {
  std::array<int, 3> vertices{};  // sorted IDs
  bool internal = false;          // entirely inside one non-quadric cluster
  int cluster = -1;               // internal: the cluster index
  std::array<int, 3> cluster_triple{-1, -1, -1};  // inter-cluster: sorted indices
  int v2_count = 0;
};

ClusterLayout build_layout(const ErGraph& er, int starter);

/// Layout with the lowest-ID quadric as starter.
ClusterLayout build_layout(const ErGraph& er);

struct LayoutReport {
  std::vector<ClauseResult> checks;
  bool all_pass() const;
};

/// Intra-cluster structure: C_0 edge-free; every non-quadric cluster is a
/// fan of (q-1)/2 edge-disjoint triangles through its center.
LayoutReport verify_intra(const ErGraph& er, const ClusterLayout& layout);

/// Inter-cluster structure: q+1 links to C_0 with one per quadric, two
/// quadric neighbors per V1 vertex, q-2 independent edges between every
/// non-quadric cluster pair, and the u' vertex with its quadric-neighbor
/// criterion.
LayoutReport verify_inter(const ErGraph& er, const ClusterLayout& layout);

/// Every triangle, found as the unique third vertex of each non-quadric
/// edge and deduplicated. Labeled internal/inter-cluster against layout.
std::vector<TriangleRecord> enumerate_triangles(const ErGraph& er,
                                                const ClusterLayout& layout);

/// Every unordered triple of distinct non-quadric clusters is joined by
/// exactly one inter-cluster triangle.
LayoutReport verify_block_design(const ErGraph& er, const ClusterLayout& layout,
                                 const std::vector<TriangleRecord>& triangles);

/// Counts of inter-cluster triangles keyed by V2 multiplicity (0..3).
std::array<long long, 4> triangle_distribution(
    const std::vector<TriangleRecord>& triangles);

/// Expected inter-cluster shape counts from q mod 4 (index = V2 count).
std::array<long long, 4> expected_triangle_distribution(int q);

/// Class of the third vertex of the unique triangle through the adjacent
/// non-quadric pair (u, v). Throws NoAlternatePathError if either
/// endpoint is quadric.
VClass intermediate_type(const ErGraph& er, int u, int v);

}  // namespace polarfly

#endif
