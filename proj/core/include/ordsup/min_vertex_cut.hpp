#pragma once

#include "ordsup/graph.hpp"

namespace ordsup {

struct MinVertexCut {
  bool inseparable = false;  // A and B share a vertex or an edge
  int size = 0;
  VertexSet cut;  // vertices outside A and B whose removal separates them
};

// Minimum vertex cut between the disjoint non-adjacent vertex sets A and B,
// by unit-capacity vertex splitting and max flow. The returned cut is
// re-verified by a component run before returning.
MinVertexCut min_vertex_cut(const SimpleGraph& g, const VertexSet& a,
                            const VertexSet& b);

}  // namespace ordsup
