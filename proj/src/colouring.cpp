#include "nsd/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsd/errors.hpp"

namespace nsd {

rational::rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw internal_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

rational rational::operator-(const rational& o) const {
    return rational(num * o.den - o.num * den, den * o.den);
}

rational rational::operator+(const rational& o) const {
    return rational(num * o.den + o.num * den, den * o.den);
}

namespace {

sum_profile profile_from_sums(std::vector<std::int64_t> sums) {
    sum_profile p;
    const std::int64_t total = std::accumulate(sums.begin(), sums.end(), std::int64_t{0});
    p.mean = sums.empty() ? rational(0) : rational(total, static_cast<std::int64_t>(sums.size()));
    p.deviations.reserve(sums.size());
    rational acc(0);
    for (std::int64_t s : sums) {
        p.deviations.push_back(rational(s) - p.mean);
        acc = acc + p.deviations.back();
    }
    if (acc != rational(0)) throw internal_error("deviations do not sum to zero");
    p.sums = std::move(sums);
    return p;
}

void check_edge_coverage(const graph& g, const edge_colouring& c) {
    if (c.colour.size() != g.edges.size()) {
        throw parse_error("colouring covers " + std::to_string(c.colour.size()) + " edges, graph has " +
                          std::to_string(g.edges.size()));
    }
    for (const auto& e : g.edges) {
        if (!c.colour.count(e)) {
            throw parse_error("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              ") missing from colouring");
        }
    }
}

// Class sizes differ by at most one, counting the declared but unused
// classes as empty.
bool equitable_over(const std::map<colour_t, std::int64_t>& class_sizes, colour_t k) {
    if (class_sizes.empty()) return true;
    std::int64_t max_size = 0;
    std::int64_t min_used = class_sizes.begin()->second;
    for (const auto& [c, cnt] : class_sizes) {
        max_size = std::max(max_size, cnt);
        min_used = std::min(min_used, cnt);
    }
    const bool unused_classes = static_cast<colour_t>(class_sizes.size()) < k;
    const std::int64_t min_size = unused_classes ? 0 : min_used;
    return max_size - min_size <= 1;
}

verification_report report_from(const graph& g, const sum_profile& profile,
                                const std::map<colour_t, std::int64_t>& class_sizes, colour_t k,
                                bool in_range) {
    verification_report rep;
    rep.class_sizes = class_sizes;
    rep.colours_in_range = in_range;
    for (const auto& e : g.edges) {
        if (profile.sums[e.first] == profile.sums[e.second]) rep.nsd_violations.push_back(e);
    }
    rep.equitable = equitable_over(class_sizes, k);
    rep.valid = rep.nsd_violations.empty() && rep.equitable && rep.colours_in_range;
    std::ostringstream notes;
    if (!rep.colours_in_range) notes << "colours outside 1..k; ";
    if (!rep.equitable) notes << "class sizes differ by more than one; ";
    if (!rep.nsd_violations.empty()) {
        notes << rep.nsd_violations.size() << " adjacent pairs share a sum (first: ("
              << rep.nsd_violations[0].first << "," << rep.nsd_violations[0].second << ")); ";
    }
    if (rep.valid) notes << "valid";
    rep.notes = notes.str();
    return rep;
}

}  // namespace

sum_profile edge_sums(const graph& g, const edge_colouring& c) {
    check_edge_coverage(g, c);
    std::vector<std::int64_t> sums(g.n, 0);
    for (const auto& [e, col] : c.colour) {
        if (!g.has_edge(e.first, e.second)) {
            throw parse_error("colouring refers to edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") not in graph");
        }
        sums[e.first] += col;
        sums[e.second] += col;
    }
    return profile_from_sums(std::move(sums));
}

sum_profile total_sums(const graph& g, const total_colouring& c) {
    if (static_cast<int>(c.vertex_colour.size()) != g.n) {
        throw parse_error("vertex colouring covers " + std::to_string(c.vertex_colour.size()) +
                          " vertices, graph has " + std::to_string(g.n));
    }
    edge_colouring ec{c.k, c.edge_colour};
    check_edge_coverage(g, ec);
    std::vector<std::int64_t> sums(g.n, 0);
    for (int v = 0; v < g.n; ++v) sums[v] = c.vertex_colour[v];
    for (const auto& [e, col] : c.edge_colour) {
        if (!g.has_edge(e.first, e.second)) {
            throw parse_error("colouring refers to edge (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ") not in graph");
        }
        sums[e.first] += col;
        sums[e.second] += col;
    }
    return profile_from_sums(std::move(sums));
}

verification_report verify_edge(const graph& g, const edge_colouring& c) {
    const sum_profile profile = edge_sums(g, c);
    std::map<colour_t, std::int64_t> class_sizes;
    bool in_range = c.k >= 1;
    for (const auto& [e, col] : c.colour) {
        ++class_sizes[col];
        if (col < 1 || col > c.k) in_range = false;
    }
    return report_from(g, profile, class_sizes, c.k, in_range);
}

verification_report verify_total(const graph& g, const total_colouring& c) {
    const sum_profile profile = total_sums(g, c);
    std::map<colour_t, std::int64_t> class_sizes;
    bool in_range = c.k >= 1;
    for (colour_t col : c.vertex_colour) {
        ++class_sizes[col];
        if (col < 1 || col > c.k) in_range = false;
    }
    for (const auto& [e, col] : c.edge_colour) {
        ++class_sizes[col];
        if (col < 1 || col > c.k) in_range = false;
    }
    return report_from(g, profile, class_sizes, c.k, in_range);
}

bool deviation_check(const graph& g, const edge_colouring& c) {
    if (g.n == 0) throw unsupported_error("empty graph");
    const int d = g.degree(0);
    for (int v = 1; v < g.n; ++v) {
        if (g.degree(v) != d) throw unsupported_error("graph is not regular");
    }
    if (c.k > 3) throw unsupported_error("deviation check expects colours within 1..3");
    const sum_profile profile = edge_sums(g, c);

    std::vector<std::int64_t> d1(g.n, 0), d3(g.n, 0);
    std::int64_t e1 = 0, e3 = 0;
    for (const auto& [e, col] : c.colour) {
        if (col < 1 || col > 3) throw unsupported_error("deviation check expects colours within 1..3");
        if (col == 1) {
            ++d1[e.first];
            ++d1[e.second];
            ++e1;
        } else if (col == 3) {
            ++d3[e.first];
            ++d3[e.second];
            ++e3;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (profile.sums[v] != d3[v] - d1[v] + 2 * d) return false;
    }
    if (e1 == e3) {
        if (profile.mean != rational(2 * d)) return false;
        for (int v = 0; v < g.n; ++v) {
            if (profile.deviations[v] != rational(d3[v] - d1[v])) return false;
        }
    }
    return true;
}

total_colouring extend_edge_to_total(const graph& g, const edge_colouring& c) {
    const verification_report rep = verify_edge(g, c);
    if (!rep.valid) throw unsupported_error("edge colouring fails verification: " + rep.notes);

    const colour_t k = c.k;
    const std::int64_t total = g.n + static_cast<std::int64_t>(g.edges.size());
    const std::int64_t q = total / k;
    const std::int64_t r = total % k;

    // Pick the r largest classes (size descending, colour ascending, with
    // declared-but-unused colours acting as empty classes) to reach q+1;
    // the rest stay at q. Feasible because input classes differ by <= 1.
    std::vector<std::pair<std::int64_t, colour_t>> used;  // (-size, colour)
    for (const auto& [col, cnt] : rep.class_sizes) used.emplace_back(-cnt, col);
    std::sort(used.begin(), used.end());

    std::map<colour_t, std::int64_t> want;  // target class size per colour
    {
        std::int64_t remaining_big = r;
        std::size_t ui = 0;
        for (; ui < used.size() && remaining_big > 0; ++ui, --remaining_big) want[used[ui].second] = q + 1;
        for (; ui < used.size(); ++ui) want[used[ui].second] = q;
        // unused colours, smallest first, absorb what is left of C_{q+1}
        for (colour_t col = 1; remaining_big > 0 && col <= k; ++col) {
            if (!want.count(col) && !rep.class_sizes.count(col)) {
                want[col] = q + 1;
                --remaining_big;
            }
        }
        if (remaining_big > 0) throw internal_error("vertex extension could not place all large classes");
    }

    // Vertex quotas q'_i per colour, in ascending colour order. Colours in
    // C_q that are unused keep quota q; they only matter when q > 0, in
    // which case k <= |V|+|E| and the scan below is small.
    std::vector<std::pair<colour_t, std::int64_t>> quota;
    auto class_size = [&](colour_t col) {
        auto it = rep.class_sizes.find(col);
        return it == rep.class_sizes.end() ? std::int64_t{0} : it->second;
    };
    if (q > 0) {
        for (colour_t col = 1; col <= k; ++col) {
            const std::int64_t target = want.count(col) ? want[col] : q;
            const std::int64_t qi = target - class_size(col);
            if (qi < 0) throw internal_error("negative vertex quota");
            if (qi > 0) quota.emplace_back(col, qi);
        }
    } else {
        for (const auto& [col, target] : want) {
            const std::int64_t qi = target - class_size(col);
            if (qi < 0) throw internal_error("negative vertex quota");
            if (qi > 0) quota.emplace_back(col, qi);
        }
        std::sort(quota.begin(), quota.end());
    }
    std::int64_t quota_sum = 0;
    for (const auto& [col, qi] : quota) quota_sum += qi;
    if (quota_sum != g.n) throw internal_error("vertex quotas do not add up to n");

    // Vertices by ascending sum, ties by index; ties only happen between
    // non-adjacent vertices, so blockwise assignment keeps sums distinct
    // across every edge.
    const sum_profile profile = edge_sums(g, c);
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (profile.sums[a] != profile.sums[b]) return profile.sums[a] < profile.sums[b];
        return a < b;
    });

    total_colouring t;
    t.k = k;
    t.edge_colour = c.colour;
    t.vertex_colour.assign(g.n, 0);
    std::size_t qi = 0;
    std::int64_t taken = 0;
    for (int v : order) {
        while (qi < quota.size() && taken == quota[qi].second) {
            ++qi;
            taken = 0;
        }
        if (qi == quota.size()) throw internal_error("ran out of vertex quota");
        t.vertex_colour[v] = quota[qi].first;
        ++taken;
    }

    const verification_report out = verify_total(g, t);
    if (!out.valid) throw internal_error("extended total colouring failed verification: " + out.notes);
    return t;
}

edge_colouring powers_of_two_colouring(const graph& g) {
    if (has_isolated_edge(g)) throw unsupported_error("graph has an isolated edge");
    const std::size_t m = g.edges.size();
    if (m > 62) throw unsupported_error("powers-of-two colouring overflows beyond 62 edges");
    edge_colouring c;
    if (m == 0) {
        c.k = 1;
        return c;
    }
    c.k = std::int64_t{1} << (m - 1);
    colour_t col = 1;
    for (const auto& e : g.edges) {
        c.colour[e] = col;
        col <<= 1;
    }
    return c;
}

}  // namespace nsd
