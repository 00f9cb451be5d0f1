#include "polarfly/expand.hpp"

#include <algorithm>
#include <set>

namespace polarfly {

ExpandedGraph expand_quadric(const ErGraph& er, const ClusterLayout& layout,
                             int n_replications) {
  if (er.q % 2 == 0) throw OddQRequiredError(er.q);
  if (n_replications < 1) throw std::invalid_argument("n_replications must be >= 1");

  const auto& quadrics = layout.clusters[0];
  ExpandedGraph out;
  out.method = ExpansionMethod::QuadricReplication;
  out.base_n = er.n();

  int total = er.n() + n_replications * static_cast<int>(quadrics.size());
  out.g = Graph(total);
  for (auto [u, v] : er.g.edges()) out.g.add_edge(u, v);

  // family[k] = original quadric plus all replicas created so far
  std::vector<std::vector<int>> family(quadrics.size());
  for (size_t k = 0; k < quadrics.size(); ++k) family[k] = {quadrics[k]};

  int next_id = er.n();
  for (int r = 0; r < n_replications; ++r) {
    ReplicaCluster rc;
    rc.source_cluster = 0;
    for (size_t k = 0; k < quadrics.size(); ++k) {
      int w = quadrics[k];
      int wr = next_id++;
      rc.source_vertices.push_back(w);
      rc.vertex_ids.push_back(wr);
      // replica inherits the original's (all-V1) neighborhood
      for (int u : er.g.adj[w]) out.g.add_edge(wr, u);
      // quadric family is a clique
      for (int member : family[k]) out.g.add_edge(wr, member);
      family[k].push_back(wr);
    }
    out.added_clusters.push_back(std::move(rc));
  }
  out.g.finalize();
  return out;
}

ExpandedGraph expand_nonquadric(const ErGraph& er, const ClusterLayout& layout,
                                int n_replications) {
  const int q = er.q;
  if (q % 2 == 0) throw OddQRequiredError(q);
  if (n_replications < 1) throw std::invalid_argument("n_replications must be >= 1");
  if (n_replications > q)
    throw TooManyReplicationsError("at most q non-quadric replications, got " +
                                   std::to_string(n_replications));

  ExpandedGraph out;
  out.method = ExpansionMethod::NonQuadricRoundRobin;
  out.base_n = er.n();
  const int total = er.n() + n_replications * q;

  // build with neighbor sets, convert to sorted adjacency at the end
  std::vector<std::set<int>> nbr(total);
  auto link = [&](int a, int b) {
    nbr[a].insert(b);
    nbr[b].insert(a);
  };
  for (auto [u, v] : er.g.edges()) link(u, v);

  // Fix-up targets: originals C_1..C_q plus every replica created so far.
  struct Target {
    std::vector<int> members;
    int center;
    int source_cluster;  // -1 marks a replica target
    int replica_of_cluster;
  };
  std::vector<Target> targets;
  for (int j = 1; j < layout.num_clusters(); ++j)
    targets.push_back({layout.clusters[j], layout.centers[j], j, j});

  int next_id = er.n();
  for (int step = 1; step <= n_replications; ++step) {
    const int i = step;  // round-robin in cluster-index order C_1, C_2, ...
    const auto& members = layout.clusters[i];
    std::set<int> member_set(members.begin(), members.end());

    ReplicaCluster rc;
    rc.source_cluster = i;
    std::vector<int> replica_of(er.n(), -1);
    for (int v : members) {
      int vr = next_id++;
      rc.source_vertices.push_back(v);
      rc.vertex_ids.push_back(vr);
      replica_of[v] = vr;
    }

    // Cluster replication on the current graph: intra-cluster edges are
    // duplicated among replicas; every other edge of a member re-attaches
    // to the member's replica.
    for (int v : members) {
      int vr = replica_of[v];
      for (int w : nbr[v]) {
        if (member_set.count(w))
          link(vr, replica_of[w]);
        else
          link(vr, w);
      }
    }

    // u' fix-up: towards every other target, exactly one non-center vertex
    // of C_i has no edge into it (the center has no inter-cluster edges at
    // all); wire that vertex's replica to the target's center.
    int replica_center = replica_of[layout.centers[i]];
    for (const auto& target : targets) {
      if (target.replica_of_cluster == i) continue;
      std::set<int> tset(target.members.begin(), target.members.end());
      int uprime = -1;
      for (int v : members) {
        if (v == layout.centers[i]) continue;
        bool connected =
            std::any_of(nbr[v].begin(), nbr[v].end(),
                        [&](int w) { return tset.count(w) > 0; });
        if (!connected) {
          if (uprime >= 0)
            throw std::logic_error("multiple unconnected vertices during fix-up");
          uprime = v;
        }
      }
      if (uprime < 0)
        throw std::logic_error("no unconnected vertex during fix-up");
      link(replica_of[uprime], target.center);
    }

    targets.push_back({rc.vertex_ids, replica_center, -1, i});
    out.added_clusters.push_back(std::move(rc));
  }

  out.g = Graph(total);
  for (int v = 0; v < total; ++v)
    for (int w : nbr[v])
      if (v < w) out.g.add_edge(v, w);
  out.g.finalize();
  return out;
}

}  // namespace polarfly
