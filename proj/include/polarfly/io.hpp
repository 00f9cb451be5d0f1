#ifndef POLARFLY_IO_HPP
#define POLARFLY_IO_HPP

#include <iosfwd>
#include <string>

#include "polarfly/expand.hpp"
#include "polarfly/layout.hpp"

namespace polarfly {

/// Edge list: '#' header lines carrying q, p, m, modulus and vertex
/// ordering, then one "u v" line per edge (u < v), self-loops omitted.
void write_edge_list(std::ostream& os, const ErGraph& er);
std::string edge_list_string(const ErGraph& er);

/// Loads a file produced by write_edge_list and returns the graph (with
/// classes recomputed from the reconstructed field). Throws IoError on
/// malformed input.
ErGraph read_edge_list(std::istream& is);

/// DOT with W/V1/V2 vertex coloring.
void write_dot(std::ostream& os, const ErGraph& er);

/// JSON documents (nlohmann dumps with sorted keys for byte stability).
std::string graph_json(const ErGraph& er);
std::string layout_json(const ErGraph& er, const ClusterLayout& layout,
                        const std::vector<TriangleRecord>& triangles);
std::string expanded_json(const ErGraph& er, const ExpandedGraph& ex);
std::string expanded_edge_list(const ErGraph& er, const ExpandedGraph& ex);

}  // namespace polarfly

#endif
