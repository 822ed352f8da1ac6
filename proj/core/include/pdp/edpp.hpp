#pragma once

#include "pdp/graph.hpp"
#include "pdp/search.hpp"

namespace pdp {

// Result of the degree-reduction rewrite: the vertex-disjoint instance, plus
// enough provenance to map solutions back.
struct GadgetMap {
  Instance original;
  Instance reduced;
  // reduced edge -> originating original edge, or -1 for gadget-internal
  // edges (terminal stubs and expansion-cycle edges, all weight 0).
  std::vector<int> edge_origin;
  // original terminal vertex -> its relocated stub vertex in the reduced graph
  std::vector<std::pair<int, int>> terminal_relocation;
};

// Rewrites a one-face edge-disjoint instance into a max-degree-3
// vertex-disjoint instance on the same face:
//   1. every terminal is relocated onto a fresh degree-1 stub poking into the
//      designated face (weight-0 edge), and
//   2. every vertex that could still host two edge-disjoint-but-vertex-
//      sharing routes is expanded into a cycle of degree-3 ports following
//      its rotation order (weight-0 cycle edges).
// In the result, edge-disjoint and vertex-disjoint routings coincide, and
// lengths are preserved because gadget edges cost nothing.
GadgetMap reduce_edpp(const Instance& instance);

// Maps a vertex-disjoint solution of the reduced instance back to
// edge-disjoint paths in the original graph, dropping gadget edges.
Solution lift_solution(const GadgetMap& gm, const Solution& sol);

// Paths simple, pairwise edge-disjoint (vertices may repeat across paths),
// endpoints per the demands, claimed total weight correct.
bool validate_edge_disjoint(const Instance& instance, const Solution& sol);

}  // namespace pdp
