#pragma once

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

enum class majority { ones, twos };

// Parity pattern the bipartite machinery maintains: one side of the
// bipartition carries even totals, the other odd ones.
struct parity_target {
    std::vector<int> even_side;
    std::vector<int> odd_side;
};

// Classification of an edge by (end, edge, end) colours up to swapping the
// ends: 112 covers 211 and 122 covers 221.
enum class edge_type { t111, t222, t212, t122, t121, t112 };

edge_type classify_edge(const total_colouring& c, edge e);

// All edges 1, one seed vertex 2, remaining vertices chosen to give one
// side even and the other side odd sums; one edge negative restores a
// majority of 1s when every vertex came out 2. Connected input, >= 1 edge.
total_colouring parity_base(const graph& g, const bipartition& sides);

// Flips 1 <-> 2 on u, v and uv; preserves every sum parity. Needs k = 2.
total_colouring edge_negative(total_colouring c, edge e);

// One more 2 than the input, same parity pattern. Input must be
// parity-correct with #1 > #2 >= 1 on a connected non-star graph.
total_colouring increment_twos(const graph& g, const total_colouring& c);

// Equitable total 2-nsd colouring of one connected bipartite graph; when
// |V|+|E| is odd the requested majority picks between the two variants.
total_colouring colour_connected_total(const graph& g, majority maj);

// Whole-graph driver: components are processed largest first and odd-sized
// ones alternate majorities so the global colouring stays equitable.
// Edgeless graphs come back with k = 1.
total_colouring colour_bipartite_total(const graph& g);

// k=2 for K_2, k=3 for n >= 3 (tables for n <= 4, the edge-colouring
// extension beyond).
total_colouring colour_complete_total(int n);

}  // namespace nsd
