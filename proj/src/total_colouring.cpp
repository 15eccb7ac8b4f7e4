#include "nsd/total_colouring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "nsd/complete_edge.hpp"
#include "nsd/errors.hpp"

namespace nsd {

namespace {

std::pair<std::int64_t, std::int64_t> counts(const total_colouring& c) {
    std::int64_t ones = 0, twos = 0;
    for (colour_t v : c.vertex_colour) (v == 1 ? ones : twos) += 1;
    for (const auto& [e, col] : c.edge_colour) (col == 1 ? ones : twos) += 1;
    return {ones, twos};
}

std::vector<int> sum_parities(const graph& g, const total_colouring& c) {
    const sum_profile p = total_sums(g, c);
    std::vector<int> parity(g.n);
    for (int v = 0; v < g.n; ++v) parity[v] = static_cast<int>(p.sums[v] & 1);
    return parity;
}

void require_two_colouring(const total_colouring& c) {
    if (c.k != 2) throw unsupported_error("operation requires k = 2");
    for (colour_t v : c.vertex_colour) {
        if (v != 1 && v != 2) throw unsupported_error("vertex colour outside 1..2");
    }
    for (const auto& [e, col] : c.edge_colour) {
        if (col != 1 && col != 2) throw unsupported_error("edge colour outside 1..2");
    }
}

void negate_in_place(total_colouring& c, const edge& e) {
    auto it = c.edge_colour.find(e);
    if (it == c.edge_colour.end()) throw unsupported_error("negative of an edge not in the colouring");
    it->second = 3 - it->second;
    c.vertex_colour[e.first] = 3 - c.vertex_colour[e.first];
    c.vertex_colour[e.second] = 3 - c.vertex_colour[e.second];
}

bool is_star(const graph& g) {
    if (g.edges.empty()) return true;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == static_cast<int>(g.edges.size())) return true;
    }
    return false;
}

}  // namespace

edge_type classify_edge(const total_colouring& c, edge e) {
    const colour_t a = c.vertex_colour[e.first];
    const colour_t b = c.edge_colour.at(e);
    const colour_t d = c.vertex_colour[e.second];
    const colour_t lo = std::min(a, d), hi = std::max(a, d);
    if (lo == 1 && hi == 1) return b == 1 ? edge_type::t111 : edge_type::t121;
    if (lo == 2 && hi == 2) return b == 1 ? edge_type::t212 : edge_type::t222;
    return b == 1 ? edge_type::t112 : edge_type::t122;
}

total_colouring parity_base(const graph& g, const bipartition& sides) {
    if (g.edges.empty()) throw unsupported_error("parity base needs at least one edge");
    if (components(g).size() != 1) throw unsupported_error("parity base needs a connected graph");

    total_colouring c;
    c.k = 2;
    c.vertex_colour.assign(g.n, 0);
    for (const auto& e : g.edges) c.edge_colour[e] = 1;

    std::vector<int> side(g.n, 0);
    for (int v : sides.side_y) side[v] = 1;
    const int seed = sides.side_x.front();
    c.vertex_colour[seed] = 2;
    const int target_x = static_cast<int>((2 + g.degree(seed)) & 1);
    for (int v = 0; v < g.n; ++v) {
        if (v == seed) continue;
        const int target = side[v] == 0 ? target_x : 1 - target_x;
        c.vertex_colour[v] = ((1 + g.degree(v)) & 1) == target ? 1 : 2;
    }

    auto [ones, twos] = counts(c);
    if (ones <= twos) {
        // only happens when every vertex came out 2; one negative flips the
        // balance without touching any sum
        negate_in_place(c, g.edges.front());
        std::tie(ones, twos) = counts(c);
    }
    if (!(ones > twos && twos >= 1)) throw internal_error("parity base missed its colour balance");

    const std::vector<int> parity = sum_parities(g, c);
    for (const auto& [u, v] : g.edges) {
        if (parity[u] == parity[v]) throw internal_error("parity base left equal parities across an edge");
    }
    return c;
}

total_colouring edge_negative(total_colouring c, edge e) {
    require_two_colouring(c);
    negate_in_place(c, e);
    return c;
}

namespace {

// Sequentially negates a path given as a vertex list.
void negate_path(total_colouring& c, const std::vector<int>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) negate_in_place(c, make_edge(path[i - 1], path[i]));
}

// A path of three consecutive edges inside the subgraph of t212 edges; the
// subgraph is guaranteed to contain a cycle here.
std::vector<int> three_edge_path_in_212(const graph& g, const total_colouring& c) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [e, col] : c.edge_colour) {
        if (classify_edge(c, e) == edge_type::t212) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    std::vector<int> parent(g.n, -2);
    std::vector<int> cycle;
    std::function<bool(int, int)> dfs = [&](int v, int from) {
        parent[v] = from;
        for (int w : adj[v]) {
            if (w == from) continue;
            if (parent[w] == -2) {
                if (dfs(w, v)) return true;
            } else {
                // back edge: v .. w along parents is a path in the subgraph
                cycle.clear();
                for (int a = v; a != w; a = parent[a]) cycle.push_back(a);
                cycle.push_back(w);
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < g.n && cycle.empty(); ++v) {
        if (parent[v] == -2 && !adj[v].empty()) dfs(v, -1);
    }
    if (cycle.size() < 4) throw internal_error("2-heavy subgraph holds no usable cycle");
    cycle.resize(4);
    return cycle;
}

}  // namespace

total_colouring increment_twos(const graph& g, const total_colouring& c) {
    require_two_colouring(c);
    if (components(g).size() != 1) throw unsupported_error("increment needs a connected graph");
    if (is_star(g)) throw unsupported_error("increment is undefined on stars");
    const auto [ones, twos] = counts(c);
    if (!(ones > twos && twos >= 1)) throw unsupported_error("increment needs a strict majority of 1s");
    const std::vector<int> parity_before = sum_parities(g, c);
    for (const auto& [u, v] : g.edges) {
        if (parity_before[u] == parity_before[v]) {
            throw unsupported_error("increment needs alternating sum parities");
        }
    }

    total_colouring out = c;
    bool done = false;

    // one flipped edge suffices when an odd-looking edge exists
    for (const auto& [e, col] : c.edge_colour) {
        const edge_type t = classify_edge(c, e);
        if (t == edge_type::t121 || t == edge_type::t112) {
            negate_in_place(out, e);
            done = true;
            break;
        }
    }

    bool any111 = false;
    for (const auto& [e, col] : c.edge_colour) {
        if (classify_edge(c, e) == edge_type::t111) any111 = true;
    }

    if (!done && !any111) {
        // only t222, t212, t122 remain; walk three steps around a cycle of
        // the all-2-endpoint light edges (the middle edge's ends flip twice)
        negate_path(out, three_edge_path_in_212(g, out));
        done = true;
    }

    if (!done) {
        // some t111 edge exists
        edge heavy{-1, -1};
        bool has222 = false;
        for (const auto& [e, col] : c.edge_colour) {
            if (classify_edge(c, e) == edge_type::t222) {
                heavy = e;
                has222 = true;
                break;
            }
        }
        if (has222) {
            // a 222 edge never touches a 111 edge; flip it plus two
            // adjacent 111 edges
            edge f1{-1, -1}, f2{-1, -1};
            for (const auto& [e, col] : c.edge_colour) {
                if (classify_edge(c, e) != edge_type::t111) continue;
                for (int end : {e.first, e.second}) {
                    for (int w : g.adj[end]) {
                        const edge other = make_edge(end, w);
                        if (other == e) continue;
                        if (classify_edge(c, other) == edge_type::t111) {
                            f1 = e;
                            f2 = other;
                            break;
                        }
                    }
                    if (f1.first >= 0) break;
                }
                if (f1.first >= 0) break;
            }
            if (f1.first < 0) throw internal_error("isolated 111 edge contradicts the parity pattern");
            negate_in_place(out, heavy);
            negate_in_place(out, f1);
            negate_in_place(out, f2);
            done = true;
        } else {
            // A-edges are the 111s, B-edges everything else; find a 3-edge
            // path mixing the two kinds and flip it end to end
            std::vector<std::vector<int>> adj_a(g.n);
            for (const auto& [e, col] : c.edge_colour) {
                if (classify_edge(c, e) == edge_type::t111) {
                    adj_a[e.first].push_back(e.second);
                    adj_a[e.second].push_back(e.first);
                }
            }
            for (auto& nb : adj_a) std::sort(nb.begin(), nb.end());
            auto is_b = [&](int a, int b) {
                const edge_type t = classify_edge(c, make_edge(a, b));
                return t == edge_type::t212 || t == edge_type::t122;
            };

            std::vector<char> seen(g.n, 0);
            std::vector<int> path;
            for (int start = 0; start < g.n && path.empty(); ++start) {
                if (seen[start] || adj_a[start].empty()) continue;
                // collect this A-component
                std::vector<int> comp;
                std::vector<int> stack{start};
                seen[start] = 1;
                while (!stack.empty()) {
                    const int v = stack.back();
                    stack.pop_back();
                    comp.push_back(v);
                    for (int w : adj_a[v]) {
                        if (!seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                std::sort(comp.begin(), comp.end());

                int center = -1;
                bool star = true;
                std::size_t comp_edges = 0;
                for (int v : comp) comp_edges += adj_a[v].size();
                comp_edges /= 2;
                for (int v : comp) {
                    if (adj_a[v].size() == comp_edges) center = v;
                }
                star = center >= 0;

                if (!star) {
                    for (int v : comp) {
                        int outside = -1;
                        for (int w : g.adj[v]) {
                            if (is_b(v, w)) {
                                outside = w;
                                break;
                            }
                        }
                        if (outside < 0) continue;
                        // vertex two A-steps away exists since this
                        // component is not a star
                        for (int z : adj_a[v]) {
                            for (int w2 : adj_a[z]) {
                                if (w2 == v) continue;
                                path = {outside, v, z, w2};
                                break;
                            }
                            if (!path.empty()) break;
                        }
                        if (!path.empty()) break;
                    }
                } else {
                    for (int leaf : comp) {
                        if (leaf == center) continue;
                        for (int w : g.adj[leaf]) {
                            if (is_b(leaf, w)) {
                                path = {w, leaf, center,
                                        adj_a[center][adj_a[center][0] == leaf ? 1 : 0]};
                                break;
                            }
                        }
                        if (!path.empty()) break;
                    }
                    if (path.empty()) {
                        for (int p : g.adj[center]) {
                            if (!is_b(center, p)) continue;
                            for (int r : g.adj[p]) {
                                if (r == center) continue;
                                if (!is_b(p, r)) {
                                    throw internal_error("second edge off the star is not light-mixed");
                                }
                                path = {adj_a[center][0], center, p, r};
                                break;
                            }
                            if (!path.empty()) break;
                        }
                    }
                }
            }
            if (path.empty()) throw internal_error("no mixed 3-edge path despite a non-star graph");
            negate_path(out, path);
            done = true;
        }
    }

    const auto [ones2, twos2] = counts(out);
    if (twos2 != twos + 1) throw internal_error("increment changed the 2-count by more than one");
    if (sum_parities(g, out) != parity_before) throw internal_error("increment disturbed a sum parity");
    return out;
}

total_colouring colour_connected_total(const graph& g, majority maj) {
    if (components(g).size() != 1) throw unsupported_error("component colouring needs a connected graph");

    total_colouring c;
    c.k = 2;
    if (g.edges.empty()) {
        c.vertex_colour.assign(g.n, maj == majority::ones ? 1 : 2);
        return c;
    }
    const bipartition sides = find_bipartition(g);

    if (g.n == 2) {
        c = parity_base(g, sides);
        if (maj == majority::twos) {
            // the mirror image happens to keep the two sums apart here
            for (auto& vc : c.vertex_colour) vc = 3 - vc;
            for (auto& [e, col] : c.edge_colour) col = 3 - col;
        }
    } else if (is_star(g)) {
        const colour_t vertex_colour = maj == majority::ones ? 1 : 2;
        c.vertex_colour.assign(g.n, vertex_colour);
        for (const auto& e : g.edges) c.edge_colour[e] = 3 - vertex_colour;
    } else {
        c = parity_base(g, sides);
        const std::int64_t total = g.n + static_cast<std::int64_t>(g.edges.size());
        const std::int64_t target =
            total % 2 == 0 ? total / 2 : (maj == majority::twos ? (total + 1) / 2 : total / 2);
        auto twos_now = [&] { return counts(c).second; };
        if (twos_now() > target) throw internal_error("parity base overshot the target 2-count");
        while (twos_now() < target) c = increment_twos(g, c);
    }

    const verification_report rep = verify_total(g, c);
    if (!rep.valid) throw internal_error("component total colouring failed verification: " + rep.notes);
    return c;
}

total_colouring colour_bipartite_total(const graph& g) {
    find_bipartition(g);  // rejects odd cycles

    total_colouring result;
    if (g.edges.empty()) {
        result.k = 1;
        result.vertex_colour.assign(g.n, 1);
        return result;
    }

    result.k = 2;
    result.vertex_colour.assign(g.n, 0);

    std::vector<std::vector<int>> comps = components(g);
    std::vector<std::size_t> order(comps.size());
    std::vector<std::size_t> weight(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::size_t edges = 0;
        for (int v : comps[i]) edges += g.adj[v].size();
        weight[i] = comps[i].size() + edges / 2;
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (weight[a] != weight[b]) return weight[a] > weight[b];
        return comps[a][0] < comps[b][0];
    });

    majority next = majority::ones;
    for (std::size_t idx : order) {
        const std::vector<int>& comp = comps[idx];
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < comp.size(); ++i) to_local[comp[i]] = static_cast<int>(i);
        std::vector<edge> local_edges;
        for (const auto& [u, v] : g.edges) {
            if (to_local.count(u) && to_local.count(v)) {
                local_edges.push_back(make_edge(to_local[u], to_local[v]));
            }
        }
        const graph sub = make_graph(static_cast<int>(comp.size()), std::move(local_edges));

        majority maj = majority::ones;
        if (weight[idx] % 2 == 1) {
            maj = next;
            next = next == majority::ones ? majority::twos : majority::ones;
        }
        const total_colouring local = colour_connected_total(sub, maj);
        for (std::size_t i = 0; i < comp.size(); ++i) result.vertex_colour[comp[i]] = local.vertex_colour[i];
        for (const auto& [e, col] : local.edge_colour) {
            result.edge_colour[make_edge(comp[e.first], comp[e.second])] = col;
        }
    }

    const verification_report rep = verify_total(g, result);
    if (!rep.valid) throw internal_error("bipartite total colouring failed verification: " + rep.notes);
    return result;
}

total_colouring colour_complete_total(int n) {
    if (n < 2) throw unsupported_error("total colourings of K_n start at n = 2");
    total_colouring c;
    if (n == 2) {
        c.k = 2;
        c.vertex_colour = {1, 2};
        c.edge_colour[{0, 1}] = 1;
    } else if (n == 3) {
        c.k = 3;
        c.vertex_colour = {1, 2, 3};
        c.edge_colour = {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}};
    } else if (n == 4) {
        c.k = 3;
        c.vertex_colour = {1, 1, 2, 3};
        c.edge_colour = {{{0, 1}, 1}, {{0, 2}, 2}, {{0, 3}, 3}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 3}};
    } else {
        return extend_edge_to_total(complete(n), colour_complete_edge(n));
    }
    const verification_report rep = verify_total(complete(n), c);
    if (!rep.valid) throw internal_error("small complete total table failed verification: " + rep.notes);
    return c;
}

}  // namespace nsd
