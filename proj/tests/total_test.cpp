#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nsd/colouring.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/total_colouring.hpp"

using namespace nsd;

namespace {

std::pair<std::int64_t, std::int64_t> counts(const total_colouring& c) {
    std::int64_t ones = 0, twos = 0;
    for (colour_t v : c.vertex_colour) (v == 1 ? ones : twos) += 1;
    for (const auto& [e, col] : c.edge_colour) (col == 1 ? ones : twos) += 1;
    return {ones, twos};
}

std::vector<int> parities(const graph& g, const total_colouring& c) {
    const sum_profile p = total_sums(g, c);
    std::vector<int> out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = static_cast<int>(p.sums[v] & 1);
    return out;
}

graph cycle(int n) {
    std::vector<edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return make_graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("parity_base on a single edge") {
    const graph k2 = complete(2);
    const total_colouring c = parity_base(k2, find_bipartition(k2));
    CHECK(c.vertex_colour == std::vector<colour_t>{2, 1});
    CHECK(c.edge_colour.at({0, 1}) == 1);
    CHECK(total_sums(k2, c).sums == std::vector<std::int64_t>{3, 2});
    const auto [ones, twos] = counts(c);
    CHECK(ones == 2);
    CHECK(twos == 1);
}

TEST_CASE("parity_base postconditions on cycles and paths") {
    for (const graph& g : {cycle(4), cycle(6), parse_edge_list("0 1\n1 2")}) {
        const bipartition sides = find_bipartition(g);
        const total_colouring c = parity_base(g, sides);
        const auto [ones, twos] = counts(c);
        CHECK(ones > twos);
        CHECK(twos >= 1);
        const std::vector<int> par = parities(g, c);
        for (const auto& [u, v] : g.edges) CHECK(par[u] != par[v]);
    }
    CHECK_THROWS_AS(parity_base(make_graph(2, {}), bipartition{{0, 1}, {}}), unsupported_error);
}

TEST_CASE("edge_negative flips three elements and nothing else") {
    const graph c4 = cycle(4);
    total_colouring c = parity_base(c4, find_bipartition(c4));
    const std::vector<int> before = parities(c4, c);

    total_colouring once = edge_negative(c, {0, 1});
    CHECK(once.vertex_colour[0] == 3 - c.vertex_colour[0]);
    CHECK(once.vertex_colour[1] == 3 - c.vertex_colour[1]);
    CHECK(once.edge_colour.at({0, 1}) == 3 - c.edge_colour.at({0, 1}));
    CHECK(once.vertex_colour[2] == c.vertex_colour[2]);
    CHECK(parities(c4, once) == before);

    const total_colouring twice = edge_negative(once, {0, 1});
    CHECK(twice.vertex_colour == c.vertex_colour);
    CHECK(twice.edge_colour == c.edge_colour);

    total_colouring bad = c;
    bad.k = 3;
    CHECK_THROWS_AS(edge_negative(bad, {0, 1}), unsupported_error);
}

TEST_CASE("edge type classification folds the symmetric cases") {
    total_colouring c;
    c.k = 2;
    c.vertex_colour = {1, 2, 2, 1};
    c.edge_colour = {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 2}, {{0, 3}, 2}};
    CHECK(classify_edge(c, {0, 1}) == edge_type::t112);
    CHECK(classify_edge(c, {1, 2}) == edge_type::t212);
    CHECK(classify_edge(c, {2, 3}) == edge_type::t122);
    CHECK(classify_edge(c, {0, 3}) == edge_type::t121);

    // negating a 121 edge yields a 212 edge and one more 2 overall
    const auto before = counts(c);
    const total_colouring flipped = edge_negative(c, {0, 3});
    CHECK(classify_edge(flipped, {0, 3}) == edge_type::t212);
    CHECK(counts(flipped).second == before.second + 1);
}

TEST_CASE("increment_twos adds exactly one 2") {
    SUBCASE("an odd-looking edge goes first") {
        const graph c4 = cycle(4);
        const total_colouring base = parity_base(c4, find_bipartition(c4));
        const auto [ones0, twos0] = counts(base);
        const total_colouring next = increment_twos(c4, base);
        const auto [ones1, twos1] = counts(next);
        CHECK(twos1 == twos0 + 1);
        CHECK(parities(c4, next) == parities(c4, base));
    }

    SUBCASE("all-2-endpoint colourings walk a light cycle") {
        // K_{2,3} with every vertex 2 and every edge 1: the light subgraph
        // is the whole graph and carries a 4-cycle
        const graph g = complete_bipartite(2, 3).g;
        total_colouring c;
        c.k = 2;
        c.vertex_colour.assign(5, 2);
        for (const auto& e : g.edges) c.edge_colour[e] = 1;
        const auto [ones0, twos0] = counts(c);
        REQUIRE(ones0 == 6);
        REQUIRE(twos0 == 5);
        for (const auto& e : g.edges) REQUIRE(classify_edge(c, e) == edge_type::t212);

        const total_colouring next = increment_twos(g, c);
        const auto [ones1, twos1] = counts(next);
        CHECK(twos1 == twos0 + 1);
        CHECK(parities(g, next) == parities(g, c));
    }

    SUBCASE("repeated increments on random bipartite graphs") {
        std::mt19937_64 rng(5);
        int exercised = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const graph g = random_bipartite(2 + rng() % 5, 2 + rng() % 5, 0.6, rng()).g;
            const auto comps = components(g);
            if (comps.size() != 1 || g.edges.empty()) continue;
            std::size_t max_deg = 0;
            for (int v = 0; v < g.n; ++v) max_deg = std::max<std::size_t>(max_deg, g.adj[v].size());
            if (max_deg == g.edges.size()) continue;  // star
            ++exercised;
            total_colouring c = parity_base(g, find_bipartition(g));
            const std::vector<int> par = parities(g, c);
            while (counts(c).first > counts(c).second) {
                const auto before = counts(c).second;
                c = increment_twos(g, c);
                CHECK(counts(c).second == before + 1);
                CHECK(parities(g, c) == par);
            }
        }
        CHECK(exercised > 10);
    }

    SUBCASE("a heavy edge among light ones") {
        // both ends and the edge coloured 2 coexisting with all-1 edges
        const graph p8 = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7");
        total_colouring c;
        c.k = 2;
        c.vertex_colour = {1, 2, 2, 2, 2, 1, 1, 1};
        c.edge_colour = {{{0, 1}, 2}, {{1, 2}, 2}, {{2, 3}, 1}, {{3, 4}, 1},
                         {{4, 5}, 2}, {{5, 6}, 1}, {{6, 7}, 1}};
        REQUIRE(classify_edge(c, {1, 2}) == edge_type::t222);
        REQUIRE(classify_edge(c, {5, 6}) == edge_type::t111);
        const auto [ones0, twos0] = counts(c);
        REQUIRE(ones0 == twos0 + 1);
        const total_colouring next = increment_twos(p8, c);
        CHECK(counts(next).second == twos0 + 1);
        CHECK(parities(p8, next) == parities(p8, c));
    }

    SUBCASE("every valid input on small graphs") {
        // enumerate all k=2 colourings meeting the preconditions and demand
        // the exact +1 with unchanged parities each time
        std::vector<graph> graphs{parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5"), cycle(6),
                                  complete_bipartite(2, 3).g, complete_bipartite(3, 3).g,
                                  parse_edge_list("0 1\n1 2\n1 3\n3 4\n4 5\n4 6")};
        long exercised = 0;
        for (const graph& g : graphs) {
            const int elements = g.n + static_cast<int>(g.edges.size());
            for (long mask = 0; mask < (1L << elements); ++mask) {
                total_colouring c;
                c.k = 2;
                c.vertex_colour.assign(g.n, 0);
                for (int i = 0; i < g.n; ++i) c.vertex_colour[i] = ((mask >> i) & 1) + 1;
                int bit = g.n;
                for (const auto& e : g.edges) c.edge_colour[e] = ((mask >> bit++) & 1) + 1;
                const auto [ones, twos] = counts(c);
                if (!(ones > twos && twos >= 1)) continue;
                const std::vector<int> par = parities(g, c);
                bool alternating = true;
                for (const auto& [u, v] : g.edges) {
                    if (par[u] == par[v]) alternating = false;
                }
                if (!alternating) continue;
                ++exercised;
                const total_colouring next = increment_twos(g, c);
                CHECK(counts(next).second == twos + 1);
                CHECK(parities(g, next) == par);
            }
        }
        CHECK(exercised > 500);
    }

    SUBCASE("preconditions are enforced") {
        const graph star = complete_bipartite(1, 3).g;
        total_colouring c;
        c.k = 2;
        c.vertex_colour.assign(4, 1);
        for (const auto& e : star.edges) c.edge_colour[e] = 1;
        CHECK_THROWS_AS(increment_twos(star, c), unsupported_error);
    }
}

TEST_CASE("colour_connected_total produces both variants") {
    SUBCASE("K_2") {
        const graph k2 = complete(2);
        const total_colouring a = colour_connected_total(k2, majority::ones);
        const total_colouring b = colour_connected_total(k2, majority::twos);
        CHECK(verify_total(k2, a).valid);
        CHECK(verify_total(k2, b).valid);
        CHECK(counts(a).first > counts(a).second);
        CHECK(counts(b).second > counts(b).first);
    }

    SUBCASE("stars use the flat pattern") {
        const graph star = complete_bipartite(1, 4).g;
        const total_colouring heavy = colour_connected_total(star, majority::twos);
        CHECK(heavy.vertex_colour == std::vector<colour_t>(5, 2));
        for (const auto& [e, col] : heavy.edge_colour) CHECK(col == 1);
        const sum_profile p = total_sums(star, heavy);
        CHECK(p.sums[0] == 6);
        CHECK(p.sums[1] == 3);
        const auto [ones, twos] = counts(heavy);
        CHECK(ones == 4);
        CHECK(twos == 5);

        const total_colouring light = colour_connected_total(star, majority::ones);
        CHECK(counts(light).first == 5);
        CHECK(verify_total(star, light).valid);
    }

    SUBCASE("general components hit the exact target counts") {
        const graph c6 = cycle(6);
        const total_colouring c = colour_connected_total(c6, majority::ones);
        const auto [ones, twos] = counts(c);
        CHECK(ones == 6);
        CHECK(twos == 6);
        CHECK(verify_total(c6, c).valid);

        const graph p4 = parse_edge_list("0 1\n1 2\n2 3");  // 7 elements, odd
        const total_colouring maj1 = colour_connected_total(p4, majority::ones);
        const total_colouring maj2 = colour_connected_total(p4, majority::twos);
        CHECK(counts(maj1).first == 4);
        CHECK(counts(maj2).second == 4);
        CHECK(verify_total(p4, maj1).valid);
        CHECK(verify_total(p4, maj2).valid);
    }
}

TEST_CASE("colour_bipartite_total") {
    SUBCASE("edgeless graphs collapse to one colour") {
        const total_colouring c = colour_bipartite_total(make_graph(5, {}));
        CHECK(c.k == 1);
        CHECK(verify_total(make_graph(5, {}), c).valid);
    }

    SUBCASE("single structures") {
        for (const graph& g : {complete(2), complete_bipartite(1, 4).g, cycle(6),
                               parse_edge_list("0 1\n1 2\n2 3")}) {
            const total_colouring c = colour_bipartite_total(g);
            CHECK(c.k <= 2);
            CHECK(verify_total(g, c).valid);
        }
    }

    SUBCASE("non-bipartite input is rejected") {
        CHECK_THROWS_AS(colour_bipartite_total(complete(3)), unsupported_error);
    }

    SUBCASE("disconnected graphs balance across components") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            const graph g = random_bipartite(1 + rng() % 6, 1 + rng() % 6, 0.4, rng()).g;
            const total_colouring c = colour_bipartite_total(g);
            CHECK(c.k <= 2);
            CHECK(verify_total(g, c).valid);
        }
    }

    SUBCASE("trees including single edges") {
        for (const graph& t : testing::all_trees_up_to(7)) {
            const total_colouring c = colour_bipartite_total(t);
            CHECK(c.k <= 2);
            CHECK(verify_total(t, c).valid);
        }
    }
}

TEST_CASE("colour_complete_total") {
    CHECK_THROWS_AS(colour_complete_total(1), unsupported_error);

    const total_colouring k2 = colour_complete_total(2);
    CHECK(k2.k == 2);
    CHECK(verify_total(complete(2), k2).valid);

    const total_colouring k3 = colour_complete_total(3);
    CHECK(k3.k == 3);
    CHECK(k3.vertex_colour == std::vector<colour_t>{1, 2, 3});
    CHECK(verify_total(complete(3), k3).valid);

    const total_colouring k4 = colour_complete_total(4);
    CHECK(k4.k == 3);
    CHECK(verify_total(complete(4), k4).valid);

    for (int n = 5; n <= 12; ++n) {
        const total_colouring c = colour_complete_total(n);
        CHECK(c.k == 3);
        CHECK(verify_total(complete(n), c).valid);
    }
}
