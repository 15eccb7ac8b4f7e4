#pragma once

// Test-side oracles: an independent graph6 encoder, exhaustive free-tree
// enumeration, and small random-graph generators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd::testing {

// Reference graph6 encoder (upper triangle column by column, 6-bit groups,
// printable offset 63). Kept independent of the parser it checks.
inline std::string encode_graph6(const graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    std::vector<bool> bits;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    }
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (std::size_t b = 0; b < bits.size(); b += 6) {
        int value = 0;
        for (int t = 0; t < 6; ++t) value = (value << 1) | (bits[b + t] ? 1 : 0);
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

// Canonical form of a free tree: AHU strings rooted at the centroid(s).
inline std::string tree_canonical(const graph& g) {
    const int n = g.n;
    if (n == 1) return "()";

    // find centroid(s) by repeatedly stripping leaves
    std::vector<int> degree(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : g.adj[v]) {
                if (!removed[w] && --degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }

    std::function<std::string(int, int)> ahu = [&](int v, int parent) -> std::string {
        std::vector<std::string> parts;
        for (int w : g.adj[v]) {
            if (w != parent) parts.push_back(ahu(w, v));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& part : parts) s += part;
        s += ")";
        return s;
    };

    std::vector<std::string> forms;
    for (int c : layer)
        if (!removed[c] || left <= 2) forms.push_back(ahu(c, -1));
    if (forms.empty()) forms.push_back(ahu(layer[0], -1));
    std::sort(forms.begin(), forms.end());
    return forms[0];
}

// All free trees with up to max_vertices vertices, one representative per
// isomorphism class, grown by attaching a leaf everywhere and dropping
// canonical duplicates.
inline std::vector<graph> all_trees_up_to(int max_vertices) {
    std::vector<graph> result;
    std::vector<graph> current{make_graph(1, {})};
    result.push_back(current[0]);
    for (int n = 2; n <= max_vertices; ++n) {
        std::map<std::string, graph> classes;
        for (const graph& t : current) {
            for (int v = 0; v < t.n; ++v) {
                std::vector<edge> edges = t.edges;
                edges.push_back({v, t.n});
                graph grown = make_graph(t.n + 1, std::move(edges));
                classes.emplace(tree_canonical(grown), std::move(grown));
            }
        }
        current.clear();
        for (auto& [key, t] : classes) {
            result.push_back(t);
            current.push_back(std::move(t));
        }
    }
    return result;
}

// Random simple graph with no isolated edge and at most max_edges edges.
inline graph random_graph_no_isolated_edge(int max_edges, std::mt19937_64& rng) {
    while (true) {
        const int n = 3 + static_cast<int>(rng() % 8);
        std::vector<edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        const int want = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
        all.resize(std::min<std::size_t>(all.size(), want));
        graph g = make_graph(n, std::move(all));
        if (!g.edges.empty() && !has_isolated_edge(g)) return g;
    }
}

}  // namespace nsd::testing
