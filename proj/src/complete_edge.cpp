#include "nsd/complete_edge.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nsd/errors.hpp"

namespace nsd {

namespace {

edge_colouring from_matrix(int n, const std::vector<std::vector<colour_t>>& upper) {
    edge_colouring c;
    c.k = 3;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) c.colour[{i, j}] = upper[i][j - i - 1];
    }
    return c;
}

std::pair<std::int64_t, std::int64_t> class13_sizes(const edge_colouring& c) {
    std::int64_t e1 = 0, e3 = 0;
    for (const auto& [e, col] : c.colour) {
        if (col == 1) ++e1;
        if (col == 3) ++e3;
    }
    return {e1, e3};
}

}  // namespace

induction_budget budget_for(int n) {
    induction_budget b;
    b.n = n;
    b.r = static_cast<std::int64_t>(n) * (n - 1) / 6;
    b.r_next = static_cast<std::int64_t>(n + 2) * (n + 1) / 6;
    b.half = (n + 2) / 2;
    b.q = b.r_next - b.r - b.half;
    if (b.q < 0) throw internal_error("negative recolouring budget at n=" + std::to_string(n));
    if (3 * b.q > 2 * n + 1 - 3 * static_cast<std::int64_t>(b.half) + 1) {
        throw internal_error("recolouring budget infeasible at n=" + std::to_string(n));
    }
    return b;
}

good_colouring validate_good(int n, edge_colouring c) {
    const graph kn = complete(n);
    good_colouring g;
    g.n = n;
    g.profile = edge_sums(kn, c);
    const auto [e1, e3] = class13_sizes(c);
    if (e1 != e3) throw internal_error("good colouring: 1- and 3-classes differ");

    const std::int64_t bound = n / 2;
    std::set<std::int64_t> seen;
    for (int v = 0; v < n; ++v) {
        const rational& mu = g.profile.deviations[v];
        if (rational(bound) < mu || mu < rational(-bound)) {
            throw internal_error("good colouring: deviation out of range at vertex " + std::to_string(v));
        }
        if (mu == rational(-bound) && g.w_min < 0) g.w_min = v;
        if (mu == rational(bound) && g.w_max < 0) g.w_max = v;
        if (!seen.insert(g.profile.sums[v]).second) {
            throw internal_error("good colouring: repeated sum at vertex " + std::to_string(v));
        }
    }
    if (g.w_min < 0 || g.w_max < 0) throw internal_error("good colouring: extreme deviations not attained");
    g.colouring = std::move(c);
    return g;
}

good_colouring base_good(int n) {
    if (n == 3) {
        return validate_good(3, from_matrix(3, {{1, 2}, {3}}));
    }
    if (n == 5) {
        return validate_good(5, from_matrix(5, {{1, 1, 1, 3}, {2, 2, 2}, {3, 2}, {3}}));
    }
    if (n == 6) {
        return validate_good(6, from_matrix(6, {{1, 1, 1, 1, 3}, {1, 2, 2, 2}, {2, 3, 2}, {3, 3}, {3}}));
    }
    throw unsupported_error("no base colouring for n=" + std::to_string(n));
}

edge_colouring colour_k4() {
    edge_colouring c;
    c.k = 4;
    c.colour = {{{0, 1}, 3}, {{0, 2}, 1}, {{0, 3}, 2}, {{1, 2}, 4}, {{1, 3}, 1}, {{2, 3}, 2}};
    return c;
}

gamma0_result gamma0(const good_colouring& base, const std::vector<int>& s) {
    const int n = base.n;
    if (static_cast<int>(s.size()) != (n + 2) / 2) {
        throw unsupported_error("gamma0 requires |S| = floor((n+2)/2)");
    }
    std::set<int> in_s(s.begin(), s.end());
    if (in_s.size() != s.size()) throw unsupported_error("gamma0: S has repeated vertices");
    for (int x : in_s) {
        if (x < 0 || x >= n) throw unsupported_error("gamma0: S must be a set of old vertices");
    }
    gamma0_result res;
    res.u = n;
    res.v = n + 1;
    res.colouring.k = 3;
    res.colouring.colour = base.colouring.colour;
    res.colouring.colour[{res.u, res.v}] = 2;
    for (int x = 0; x < n; ++x) {
        if (in_s.count(x)) {
            res.colouring.colour[make_edge(res.u, x)] = 1;
            res.colouring.colour[make_edge(res.v, x)] = 3;
        } else {
            res.colouring.colour[make_edge(res.u, x)] = 2;
            res.colouring.colour[make_edge(res.v, x)] = 2;
        }
    }
    return res;
}

namespace {

void require_two_cycle(const edge_colouring& c, int u, int v, int a, int b) {
    for (const edge& e : {make_edge(u, a), make_edge(u, b), make_edge(v, a), make_edge(v, b)}) {
        auto it = c.colour.find(e);
        if (it == c.colour.end() || it->second != 2) {
            throw unsupported_error("recolouring requires a 2-monochromatic 4-cycle");
        }
    }
}

}  // namespace

void recolour_type1(edge_colouring& c, int u, int v, int w_min, int w_max) {
    require_two_cycle(c, u, v, w_min, w_max);
    c.colour[make_edge(v, w_min)] = 1;
    c.colour[make_edge(u, w_max)] = 3;
}

void recolour_type2(edge_colouring& c, int u, int v, const std::vector<std::pair<int, int>>& pairs) {
    std::set<int> used{u, v};
    for (const auto& [x, y] : pairs) {
        if (!used.insert(x).second || !used.insert(y).second) {
            throw unsupported_error("recolouring pairs must be vertex-disjoint");
        }
        require_two_cycle(c, u, v, x, y);
    }
    for (const auto& [x, y] : pairs) {
        c.colour[make_edge(u, x)] = 1;
        c.colour[make_edge(v, y)] = 1;
        c.colour[make_edge(u, y)] = 3;
        c.colour[make_edge(v, x)] = 3;
    }
}

good_colouring extend_by_two(const good_colouring& base) {
    const int n = base.n;
    if (n < 5) throw unsupported_error("extension needs a base of order at least 5");
    const induction_budget b = budget_for(n);

    const auto [e1, e3] = class13_sizes(base.colouring);
    if (e1 != b.r || e3 != b.r) {
        throw internal_error("base colouring class sizes do not match the budget at n=" + std::to_string(n));
    }

    // S takes the lowest-index vertices; when q is odd the type-1 step needs
    // the old extremes outside S.
    std::vector<int> s;
    if (b.q % 2 == 1) {
        for (int x = 0; x < n && static_cast<int>(s.size()) < b.half; ++x) {
            if (x != base.w_min && x != base.w_max) s.push_back(x);
        }
    } else {
        for (int x = 0; x < b.half; ++x) s.push_back(x);
    }
    if (static_cast<int>(s.size()) != b.half) throw internal_error("could not assemble S");

    gamma0_result g0 = gamma0(base, s);
    std::vector<int> sbar;
    {
        std::set<int> in_s(s.begin(), s.end());
        for (int x = 0; x < n; ++x)
            if (!in_s.count(x)) sbar.push_back(x);
    }

    int w_min = g0.u, w_max = g0.v;  // extremes of gamma0 itself
    if (b.q == 1) {
        recolour_type1(g0.colouring, g0.u, g0.v, base.w_min, base.w_max);
        w_min = base.w_min;
        w_max = base.w_max;
    } else if (b.q >= 2) {
        const std::int64_t t = b.q / 2;
        std::vector<int> pool;
        for (int x : sbar) {
            if (b.q % 2 == 1 && (x == base.w_min || x == base.w_max)) continue;
            pool.push_back(x);
        }
        if (static_cast<std::int64_t>(pool.size()) < 2 * t) {
            throw internal_error("not enough spare vertices for type-2 recolouring at n=" + std::to_string(n));
        }
        std::vector<std::pair<int, int>> pairs;
        for (std::int64_t i = 0; i < t; ++i) pairs.emplace_back(pool[2 * i], pool[2 * i + 1]);
        recolour_type2(g0.colouring, g0.u, g0.v, pairs);
        if (b.q % 2 == 1) {
            recolour_type1(g0.colouring, g0.u, g0.v, base.w_min, base.w_max);
            w_min = base.w_min;
            w_max = base.w_max;
        }
    }

    good_colouring out = validate_good(n + 2, std::move(g0.colouring));
    if (out.w_min != w_min || out.w_max != w_max) {
        throw internal_error("extension moved the extreme vertices unexpectedly");
    }
    const auto [f1, f3] = class13_sizes(out.colouring);
    if (f1 != b.r_next || f3 != b.r_next) {
        throw internal_error("extension missed the balanced class size at n=" + std::to_string(n + 2));
    }
    const verification_report rep = verify_edge(complete(n + 2), out.colouring);
    if (!rep.valid) throw internal_error("extension produced an invalid colouring: " + rep.notes);
    return out;
}

edge_colouring colour_complete_edge(int n) {
    if (n < 3) throw unsupported_error("equitable nsd edge colourings of K_n need n >= 3");
    if (n == 4) return colour_k4();
    if (n == 3) return base_good(3).colouring;
    good_colouring g = (n % 2 == 1) ? base_good(5) : base_good(6);
    while (g.n < n) g = extend_by_two(g);
    return g.colouring;
}

}  // namespace nsd
