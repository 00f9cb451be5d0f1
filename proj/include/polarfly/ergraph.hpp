#ifndef POLARFLY_ERGRAPH_HPP
#define POLARFLY_ERGRAPH_HPP

#include <string>
#include <vector>

#include "polarfly/graph.hpp"
#include "polarfly/projgeom.hpp"

namespace polarfly {

enum class VClass : std::uint8_t { W, V1, V2 };

/// The Erdos-Renyi polarity graph ER_q. Vertices are the points of
/// PG(2, q) in lexicographic order; (u, v) is an edge iff dot(u, v) = 0.
/// Quadric self-loops are recorded as flags, not adjacency entries.
struct ErGraph {
  FieldSpec field;
  int q = 0;
  std::vector<ProjectivePoint> points;
  Graph g;
  std::vector<VClass> cls;
  std::vector<bool> self_loop;

  int n() const { return g.n; }
  bool is_quadric_vertex(int v) const { return cls[v] == VClass::W; }

  /// Vertex ID of a point (points are sorted, so this is a binary search).
  int vertex_of(const ProjectivePoint& p) const;

  std::vector<int> quadrics() const;
};

ErGraph build_er(const FieldSpec& spec);

/// Convenience: build ER_q from a prime power q.
ErGraph build_er(int q);

/// Same graph assembled the long way round: the point/line incidence
/// bipartite graph B(q), glued along the polarity map. Used as a
/// consistency oracle against build_er.
ErGraph build_er_via_polarity(const FieldSpec& spec);

/// B(q) itself, un-glued: 2(q^2+q+1) vertices, point i at ID i and line
/// [p_j]-dual at ID n+j.
Graph build_bipartite_incidence(const FieldSpec& spec);

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Property1Report {
  std::vector<ClauseResult> clauses;
  bool all_pass() const;
};

/// Checks the five structural clauses of ER_q for odd q: quadric
/// independence and degrees, V1/V2 neighborhood splits, the unique
/// 2-path property (self-loops counted), and triangle participation of
/// edges. Throws OddQRequiredError for even q.
Property1Report verify_property1(const ErGraph& er);

}  // namespace polarfly

#endif
