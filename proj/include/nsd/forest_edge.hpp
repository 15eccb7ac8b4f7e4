#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

enum class reduction_rule {
    path_component,
    claim2_rewrite,
    pendant_bundle,
    short_path_at_big_vertex,
    two_paths_at_deg3,
    multifather_leaves,
    multigrandfather_case,
};

const char* rule_name(reduction_rule rule);

// One located reduction of a forest, carrying everything the matching
// extension needs to pull an inner colouring back to the original forest.
struct reduction_step {
    reduction_rule rule{};

    std::vector<int> path;  // path_component: vertices end to end

    // anchors; meaning varies by rule (see forest_edge.cpp)
    int v = -1, u = -1, w = -1, x = -1, y = -1;

    std::vector<int> leaves;                // tips of deleted pendant edges at v (or at u/w)
    std::vector<int> leaves2;               // second group (multigrandfather cases A and B1)
    std::vector<std::vector<int>> chains;   // deleted pendant paths, anchor outwards, tip last
    std::vector<int> extra_children;        // still-uncoloured children edges of u (cases B2/C/D)
    int subcase = 0;                        // multigrandfather: 0=A 1=B1 2=B2 3=C 4=D

    std::vector<edge> removed_edges;
    std::optional<edge> added_edge;  // claim2_rewrite only
};

// Running 1/2 usage for the colouring under construction; stays within one
// of balance at every completed extension.
struct balance_ledger {
    std::int64_t ones = 0;
    std::int64_t twos = 0;
    std::int64_t diff() const { return ones - twos; }
    colour_t pick() const { return ones <= twos ? 1 : 2; }
    void add(colour_t c) { (c == 1 ? ones : twos) += 1; }
    void remove(colour_t c) { (c == 1 ? ones : twos) -= 1; }
};

// First applicable rule in fixed priority order. The input must be a forest
// with at least one edge and no isolated-edge component. Throws
// internal_error when no rule applies (the reduction system covers every
// such forest; anything else is a bug).
reduction_step find_reduction(const graph& f);

// The reduced forest: removed_edges dropped, added_edge inserted.
graph apply_reduction(const graph& f, const reduction_step& step);

// Pulls a colouring of the reduced forest back to f, keeping the ledger
// within one of balance and introducing no new sum conflicts.
edge_colouring extend_reduction(const graph& f, const reduction_step& step, const edge_colouring& inner,
                                balance_ledger& ledger);

// k <= 2 equitable nsd colouring of a forest without isolated edges; k=1
// when the all-ones colouring already verifies. Records the rule sequence
// in *trace when given.
edge_colouring colour_forest_edge(const graph& f);
edge_colouring colour_forest_edge(const graph& f, std::vector<reduction_step>* trace);

}  // namespace nsd
