#include "nsd/exact.hpp"

#include <algorithm>
#include <vector>

#include "nsd/errors.hpp"

namespace nsd {

namespace {

// One element to colour: a vertex (total mode) or an edge.
struct element {
    bool is_vertex = false;
    int v = -1;
    edge e{-1, -1};
};

struct searcher {
    const graph& g;
    const colour_t k;
    const std::int64_t node_limit;
    std::vector<element> elements;

    std::vector<colour_t> assigned;      // per element, 0 = free
    std::vector<std::int64_t> sums;      // partial sum per vertex
    std::vector<int> pending;            // uncoloured elements touching each vertex
    std::vector<std::int64_t> class_count;
    std::int64_t cap = 0;        // ceil(M/k): no class may exceed it
    std::int64_t floor_cap = 0;  // floor(M/k): every class must reach it
    std::int64_t deficit = 0;    // total shortfall against floor_cap
    std::int64_t nodes = 0;
    bool limit_hit = false;

    searcher(const graph& graph_in, colour_t k_in, colouring_mode mode, std::int64_t limit)
        : g(graph_in), k(k_in), node_limit(limit) {
        if (mode == colouring_mode::total) {
            for (int v = 0; v < g.n; ++v) elements.push_back({true, v, {}});
        }
        for (const auto& e : g.edges) elements.push_back({false, -1, e});
        const std::int64_t m = static_cast<std::int64_t>(elements.size());
        cap = k >= 1 ? (m + k - 1) / k : 0;
        floor_cap = k >= 1 ? m / k : 0;
        class_count.assign(static_cast<std::size_t>(k) + 1, 0);
        deficit = floor_cap * k;
        assigned.assign(elements.size(), 0);
        sums.assign(g.n, 0);
        pending.assign(g.n, 0);
        for (const auto& el : elements) {
            if (el.is_vertex) {
                ++pending[el.v];
            } else {
                ++pending[el.e.first];
                ++pending[el.e.second];
            }
        }
    }

    bool conflict_at(int v) const {
        if (pending[v] != 0) return false;
        for (int w : g.adj[v]) {
            if (pending[w] == 0 && sums[w] == sums[v]) return true;
        }
        return false;
    }

    // true when a complete assignment was found
    bool run(std::size_t idx) {
        if (idx == elements.size()) return true;
        const element& el = elements[idx];
        const std::int64_t remaining_after = static_cast<std::int64_t>(elements.size()) - idx - 1;
        for (colour_t c = 1; c <= k; ++c) {
            if (class_count[c] == cap) continue;
            if (++nodes > node_limit) {
                limit_hit = true;
                return false;
            }
            const std::int64_t deficit_delta = class_count[c] < floor_cap ? 1 : 0;
            if (deficit - deficit_delta > remaining_after) continue;  // some class starves
            ++class_count[c];
            deficit -= deficit_delta;
            assigned[idx] = c;
            bool ok = true;
            if (el.is_vertex) {
                sums[el.v] += c;
                --pending[el.v];
                ok = !conflict_at(el.v);
                if (ok && run(idx + 1)) return true;
                ++pending[el.v];
                sums[el.v] -= c;
            } else {
                sums[el.e.first] += c;
                sums[el.e.second] += c;
                --pending[el.e.first];
                --pending[el.e.second];
                ok = !conflict_at(el.e.first) && !conflict_at(el.e.second);
                if (ok && run(idx + 1)) return true;
                ++pending[el.e.first];
                ++pending[el.e.second];
                sums[el.e.first] -= c;
                sums[el.e.second] -= c;
            }
            assigned[idx] = 0;
            --class_count[c];
            deficit += deficit_delta;
            if (limit_hit) return false;
        }
        return false;
    }
};

}  // namespace

probe_result exists_equitable_nsd(const graph& g, colour_t k, colouring_mode mode,
                                  std::int64_t node_limit) {
    if (k < 1) throw unsupported_error("k must be at least 1");
    if (k > 64) throw unsupported_error("the exact solver handles k up to 64");
    if (mode == colouring_mode::edge && has_isolated_edge(g)) {
        throw unsupported_error("edge mode requires a graph without isolated edges");
    }

    searcher s(g, k, mode, node_limit);
    probe_result res;
    const bool found = s.run(0);
    res.nodes = s.nodes;
    if (s.limit_hit) {
        res.status = feasibility::limit;
        return res;
    }
    if (!found) {
        res.status = feasibility::infeasible;
        return res;
    }
    res.status = feasibility::feasible;
    if (mode == colouring_mode::edge) {
        edge_colouring c;
        c.k = k;
        for (std::size_t i = 0; i < s.elements.size(); ++i) c.colour[s.elements[i].e] = s.assigned[i];
        res.edge_witness = std::move(c);
    } else {
        total_colouring c;
        c.k = k;
        c.vertex_colour.assign(g.n, 0);
        for (std::size_t i = 0; i < s.elements.size(); ++i) {
            if (s.elements[i].is_vertex) {
                c.vertex_colour[s.elements[i].v] = s.assigned[i];
            } else {
                c.edge_colour[s.elements[i].e] = s.assigned[i];
            }
        }
        res.total_witness = std::move(c);
    }
    return res;
}

search_outcome exact_value(const graph& g, const search_config& cfg) {
    search_outcome out;
    std::int64_t budget = cfg.node_limit;
    for (colour_t k = 1; k <= cfg.k_max; ++k) {
        const probe_result probe = exists_equitable_nsd(g, k, cfg.mode, budget);
        out.nodes += probe.nodes;
        budget -= probe.nodes;
        if (probe.status == feasibility::limit) {
            out.indeterminate = true;
            return out;
        }
        if (probe.status == feasibility::feasible) {
            out.value = k;
            out.edge_witness = probe.edge_witness;
            out.total_witness = probe.total_witness;
            return out;
        }
    }
    return out;  // nothing feasible up to k_max
}

}  // namespace nsd
