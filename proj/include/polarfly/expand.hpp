#ifndef POLARFLY_EXPAND_HPP
#define POLARFLY_EXPAND_HPP

#include "polarfly/layout.hpp"

namespace polarfly {

enum class ExpansionMethod { QuadricReplication, NonQuadricRoundRobin };

struct ReplicaCluster {
  int source_cluster = -1;          // cluster index being replicated
  std::vector<int> source_vertices; // base vertex per replica slot
  std::vector<int> vertex_ids;      // new IDs, parallel to source_vertices
};

/// A base ER_q plus replica clusters. Replica IDs are appended after the
/// base IDs in cluster order, so the base edge set is always a subset of
/// the expanded one.
struct ExpandedGraph {
  ExpansionMethod method;
  int base_n = 0;
  Graph g;
  std::vector<ReplicaCluster> added_clusters;
};

/// Replicates the quadric cluster n times. Each replica quadric attaches
/// to its original's V1 neighborhood, and every quadric family (original
/// plus all of its replicas) forms a clique. Diameter stays 2.
ExpandedGraph expand_quadric(const ErGraph& er, const ClusterLayout& layout,
                             int n_replications);

/// Replicates non-quadric clusters C_1, C_2, ... in index order, each per
/// the cluster-replication rule, then wires the replica of the unique
/// unconnected vertex u' to the center of every other cluster or replica.
/// n must be in [1, q]. Diameter becomes 3 with average path < 2.
ExpandedGraph expand_nonquadric(const ErGraph& er, const ClusterLayout& layout,
                                int n_replications);

}  // namespace polarfly

#endif
