#include "nsd/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "nsd/errors.hpp"

namespace nsd {

bool graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const edge e = make_edge(u, v);
    return std::binary_search(edges.begin(), edges.end(), e);
}

graph make_graph(int n, std::vector<edge> edges) {
    if (n < 0) throw parse_error("negative vertex count");
    for (auto& e : edges) {
        if (e.first == e.second) {
            throw parse_error("self-loop at vertex " + std::to_string(e.first));
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n) {
            throw parse_error("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              ") out of range for n=" + std::to_string(n));
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw parse_error("duplicate edge");
    }
    graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (const auto& [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

graph parse_edge_list(const std::string& text) {
    std::vector<edge> edges;
    int declared_n = -1;
    int max_index = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only line
        if (first == "n") {
            if (declared_n >= 0) throw parse_error("line " + std::to_string(lineno) + ": duplicate header");
            long long cnt = -1;
            std::string extra;
            if (!(ls >> cnt) || cnt < 0 || (ls >> extra)) {
                throw parse_error("line " + std::to_string(lineno) + ": malformed header");
            }
            declared_n = static_cast<int>(cnt);
            continue;
        }
        long long u = -1, v = -1;
        std::string extra;
        try {
            u = std::stoll(first);
        } catch (...) {
            throw parse_error("line " + std::to_string(lineno) + ": malformed line");
        }
        if (!(ls >> v) || u < 0 || v < 0 || (ls >> extra)) {
            throw parse_error("line " + std::to_string(lineno) + ": malformed line");
        }
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
    }
    const int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n) {
        throw parse_error("vertex index " + std::to_string(max_index) + " >= declared n " + std::to_string(n));
    }
    return make_graph(n, std::move(edges));
}

namespace {

void trim(std::string& s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    s.erase(0, i);
}

int g6_byte(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw parse_error("graph6: truncated");
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("graph6: bad character");
    return c - 63;
}

}  // namespace

graph parse_graph6(const std::string& text) {
    std::string s = text;
    trim(s);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    if (s.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    const int b0 = g6_byte(s, pos++);
    if (b0 != 63) {  // 63 is '~', the long-form marker
        n = b0;
    } else {
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == '~') {
            throw parse_error("graph6: order above 258047 not supported");
        }
        const int b1 = g6_byte(s, pos++);
        const int b2 = g6_byte(s, pos++);
        const int b3 = g6_byte(s, pos++);
        n = (static_cast<long long>(b1) << 12) | (b2 << 6) | b3;
    }
    const long long bits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() < pos + nbytes) throw parse_error("graph6: truncated bit stream");
    if (s.size() > pos + nbytes) throw parse_error("graph6: trailing data");

    std::vector<edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = g6_byte(s, pos + static_cast<std::size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(nbytes) * 6; ++b) {
        const int byte = g6_byte(s, pos + static_cast<std::size_t>(b / 6));
        if ((byte >> (5 - b % 6)) & 1) throw parse_error("graph6: non-zero padding");
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

graph complete(int n) {
    if (n < 1) throw unsupported_error("complete graph requires n >= 1");
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

bipartite_graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw unsupported_error("complete bipartite graph requires m,n >= 1");
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    bipartite_graph bg;
    bg.g = make_graph(m + n, std::move(edges));
    for (int u = 0; u < m; ++u) bg.sides.side_x.push_back(u);
    for (int v = 0; v < n; ++v) bg.sides.side_y.push_back(m + v);
    return bg;
}

graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw unsupported_error("random tree requires n >= 1");
    if (n == 1) return make_graph(1, {});
    if (n == 2) return make_graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& a : pruefer) a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    std::vector<int> deg(n, 1);
    for (int a : pruefer) ++deg[a];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<edge> edges;
    for (int a : pruefer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, a));
        if (--deg[a] == 1) leaves.insert(a);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.push_back(make_edge(u, v));
    return make_graph(n, std::move(edges));
}

bipartite_graph random_bipartite(int m, int n, double p, std::uint64_t seed) {
    if (m < 1 || n < 1) throw unsupported_error("random bipartite graph requires m,n >= 1");
    if (p < 0.0 || p > 1.0) throw unsupported_error("edge probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < n; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, m + v);
        }
    }
    bipartite_graph bg;
    bg.g = make_graph(m + n, std::move(edges));
    for (int u = 0; u < m; ++u) bg.sides.side_x.push_back(u);
    for (int v = 0; v < n; ++v) bg.sides.side_y.push_back(m + v);
    return bg;
}

std::vector<std::vector<int>> components(const graph& g) {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(g.n, 0);
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bipartition find_bipartition(const graph& g) {
    std::vector<int> side(g.n, -1);
    for (int start = 0; start < g.n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    throw unsupported_error("graph is not bipartite: odd cycle through edge (" +
                                            std::to_string(v) + "," + std::to_string(w) + ")");
                }
            }
        }
    }
    bipartition b;
    for (int v = 0; v < g.n; ++v) (side[v] == 0 ? b.side_x : b.side_y).push_back(v);
    return b;
}

bool is_acyclic(const graph& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges) {
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool has_isolated_edge(const graph& g) {
    for (const auto& [u, v] : g.edges) {
        if (g.degree(u) == 1 && g.degree(v) == 1) return true;
    }
    return false;
}

}  // namespace nsd
