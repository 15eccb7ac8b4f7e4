#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nsd {

using edge = std::pair<int, int>;  // normalised so that first < second

inline edge make_edge(int u, int v) { return u < v ? edge{u, v} : edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. The edge list is sorted
// lexicographically and adjacency lists are sorted; both are fixed at
// construction time, so values can be shared freely across threads.
struct graph {
    int n = 0;
    std::vector<edge> edges;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const { return edges.size(); }
};

// Validates and normalises: rejects self-loops, duplicates, bad indices.
graph make_graph(int n, std::vector<edge> edges);

struct bipartition {
    std::vector<int> side_x;
    std::vector<int> side_y;
};

struct bipartite_graph {
    graph g;
    bipartition sides;
};

// Text format: one "u v" pair per line, '#' starts a comment, an optional
// "n <count>" line declares the vertex count (otherwise 1 + max index).
graph parse_edge_list(const std::string& text);

// Standard graph6 word, n <= 258047; an optional ">>graph6<<" header is
// stripped. Trailing characters and non-zero padding bits are rejected.
graph parse_graph6(const std::string& text);

graph complete(int n);
bipartite_graph complete_bipartite(int m, int n);

// Uniform random labelled tree on n vertices (Pruefer decoding),
// reproducible per seed.
graph random_tree(int n, std::uint64_t seed);

// Each cross pair kept independently with probability p; sides are
// 0..m-1 and m..m+n-1.
bipartite_graph random_bipartite(int m, int n, double p, std::uint64_t seed);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<int>> components(const graph& g);

// 2-colouring with every edge crossing; per component the side holding its
// smallest vertex is side_x. Throws unsupported_error on an odd cycle.
bipartition find_bipartition(const graph& g);

bool is_acyclic(const graph& g);

// True if some component is a single edge.
bool has_isolated_edge(const graph& g);

}  // namespace nsd
