#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

// A 3-colouring of K_n whose 1- and 3-classes balance, whose deviations all
// lie within [-floor(n/2), +floor(n/2)], and which attains both bounds.
// Such colourings are the induction currency for growing K_n two vertices
// at a time.
struct good_colouring {
    int n = 0;
    edge_colouring colouring;
    int w_min = -1;  // vertex with deviation -floor(n/2)
    int w_max = -1;  // vertex with deviation +floor(n/2)
    sum_profile profile;
};

struct induction_budget {
    int n = 0;
    std::int64_t r = 0;       // floor(n(n-1)/6), the balanced 1/3 class size
    std::int64_t r_next = 0;  // same for n+2
    int half = 0;             // floor((n+2)/2)
    std::int64_t q = 0;       // 2-edges to recolour to 1 (and as many to 3)
};

induction_budget budget_for(int n);

// Checks the good-colouring conditions plus nsd, filling w_min/w_max.
good_colouring validate_good(int n, edge_colouring c);

// Hard-coded balanced base colourings for n in {3, 5, 6}.
good_colouring base_good(int n);

// The special equitable 4-colouring of K_4 (3 colours are not enough).
edge_colouring colour_k4();

struct gamma0_result {
    edge_colouring colouring;  // over K_{n+2}
    int u = -1, v = -1;        // the two new vertices (n and n+1)
};

// Grows K_n to K_{n+2}: new vertices u,v joined by a 2-edge; u-x 1 and
// v-x 3 for x in s; u-y and v-y 2 otherwise. Needs |s| = floor((n+2)/2).
gamma0_result gamma0(const good_colouring& base, const std::vector<int>& s);

// Swaps the deviations of (u, w_min) and (v, w_max) across a
// 2-monochromatic 4-cycle, adding one edge each to classes 1 and 3.
void recolour_type1(edge_colouring& c, int u, int v, int w_min, int w_max);

// Rotates colours around vertex-disjoint 2-monochromatic 4-cycles
// u-x_i-v-y_i, leaving every deviation unchanged; adds two edges each to
// classes 1 and 3 per pair.
void recolour_type2(edge_colouring& c, int u, int v, const std::vector<std::pair<int, int>>& pairs);

// One induction step K_n -> K_{n+2}, n >= 5.
good_colouring extend_by_two(const good_colouring& base);

// k=3 for n >= 3 except K_4 which needs (and gets) k=4.
edge_colouring colour_complete_edge(int n);

}  // namespace nsd
