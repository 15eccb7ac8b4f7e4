#pragma once

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

// Optimal equitable nsd edge colouring of K_{m,n} over the vertex layout of
// complete_bipartite(m, n): k=1 when m != n, k=3 for K_{3,3}, k=2 otherwise.
// K_{1,1} is rejected (isolated edge).
edge_colouring colour_complete_bipartite_edge(int m, int n);

}  // namespace nsd
