#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"

using namespace nsd;

TEST_CASE("parse_edge_list basics") {
    const graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<edge>{{0, 1}, {1, 2}});

    const graph h = parse_edge_list("n 4\n0 1");
    CHECK(h.n == 4);
    CHECK(h.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 0"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), parse_error);

    const graph c = parse_edge_list("# a comment\n0 1 # trailing\n\n1 2");
    CHECK(c.edge_count() == 2);
}

TEST_CASE("parse_graph6 known words") {
    // encoder-derived expectations: "D~{" is K_5, "A_" is K_2, "A?" is empty
    CHECK(testing::encode_graph6(complete(5)) == "D~{");
    const graph k5 = parse_graph6("D~{");
    CHECK(k5.n == 5);
    CHECK(k5.edge_count() == 10);

    CHECK(testing::encode_graph6(complete(2)) == "A_");
    const graph k2 = parse_graph6("A_");
    CHECK(k2.n == 2);
    CHECK(k2.edge_count() == 1);

    const graph e2 = parse_graph6("A?");
    CHECK(e2.n == 2);
    CHECK(e2.edge_count() == 0);

    CHECK(parse_graph6(">>graph6<<D~{").edge_count() == 10);
    CHECK_THROWS_AS(parse_graph6("A?garbage"), parse_error);
    CHECK_THROWS_AS(parse_graph6("D~"), parse_error);
    CHECK_THROWS_AS(parse_graph6("A\x07"), parse_error);
}

TEST_CASE("graph6 round trip on generated graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        // every few trials use the long order form (n > 62)
        const int n = trial % 10 == 9 ? 63 + static_cast<int>(rng() % 40)
                                      : 1 + static_cast<int>(rng() % 62);
        std::vector<edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) edges.emplace_back(u, v);
            }
        }
        const graph g = make_graph(n, std::move(edges));
        const graph back = parse_graph6(testing::encode_graph6(g));
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("complete and complete bipartite generators") {
    CHECK(complete(3).edge_count() == 3);
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(1).edge_count() == 0);
    CHECK_THROWS_AS(complete(0), unsupported_error);

    const bipartite_graph k33 = complete_bipartite(3, 3);
    CHECK(k33.g.edge_count() == 9);
    CHECK(k33.sides.side_x.size() == 3);

    CHECK(complete_bipartite(1, 3).g.edge_count() == 3);
    CHECK(complete_bipartite(2, 2).g.edge_count() == 4);
    CHECK_THROWS_AS(complete_bipartite(0, 2), unsupported_error);
}

TEST_CASE("random_tree is a reproducible tree") {
    CHECK(random_tree(1, 5).n == 1);
    CHECK(random_tree(2, 5).edge_count() == 1);

    const graph t = random_tree(8, 42);
    CHECK(t.edge_count() == 7);
    CHECK(is_acyclic(t));
    CHECK(components(t).size() == 1);
    CHECK(random_tree(8, 42).edges == t.edges);
    CHECK(random_tree(8, 43).edges != t.edges);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const graph u = random_tree(1 + static_cast<int>(seed % 14), seed);
        CHECK(is_acyclic(u));
        CHECK(components(u).size() == 1);
        CHECK(u.edge_count() == static_cast<std::size_t>(u.n - 1));
    }
}

TEST_CASE("random_bipartite stays bipartite") {
    CHECK(random_bipartite(3, 3, 1.0, 9).g.edge_count() == 9);
    CHECK(random_bipartite(3, 3, 0.0, 9).g.edge_count() == 0);
    CHECK_THROWS_AS(random_bipartite(2, 2, 1.5, 9), unsupported_error);

    const bipartite_graph b = random_bipartite(4, 5, 0.5, 7);
    for (const auto& [u, v] : b.g.edges) {
        CHECK(u < 4);
        CHECK(v >= 4);
    }
    CHECK(random_bipartite(4, 5, 0.5, 7).g.edges == b.g.edges);
}

TEST_CASE("components") {
    CHECK(components(complete(5)).size() == 1);

    const graph two = parse_edge_list("0 1\n2 3");
    const auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});

    const graph mixed = parse_edge_list("n 4\n0 1\n1 2");
    const auto mc = components(mixed);
    REQUIRE(mc.size() == 2);
    CHECK(mc[0].size() == 3);
    CHECK(mc[1].size() == 1);

    // components partition V and no edge crosses
    const graph g = random_bipartite(4, 4, 0.3, 3).g;
    std::set<int> seen;
    for (const auto& comp : components(g)) {
        for (int v : comp) CHECK(seen.insert(v).second);
    }
    CHECK(seen.size() == static_cast<std::size_t>(g.n));
}

TEST_CASE("find_bipartition") {
    const graph c4 = parse_edge_list("0 1\n1 2\n2 3\n0 3");
    const bipartition b = find_bipartition(c4);
    CHECK(b.side_x == std::vector<int>{0, 2});
    CHECK(b.side_y == std::vector<int>{1, 3});

    CHECK_THROWS_AS(find_bipartition(complete(3)), unsupported_error);

    const bipartition k23 = find_bipartition(complete_bipartite(2, 3).g);
    CHECK(k23.side_x.size() == 2);
    CHECK(k23.side_y.size() == 3);

    // no monochromatic edge on random bipartite instances
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const graph g = random_bipartite(3, 4, 0.6, seed).g;
        const bipartition sides = find_bipartition(g);
        std::set<int> x(sides.side_x.begin(), sides.side_x.end());
        for (const auto& [u, v] : g.edges) CHECK(x.count(u) != x.count(v));
    }
}

TEST_CASE("isolated edge detection") {
    CHECK(has_isolated_edge(parse_edge_list("0 1")));
    CHECK(!has_isolated_edge(parse_edge_list("0 1\n1 2")));
    CHECK(has_isolated_edge(parse_edge_list("0 1\n1 2\n3 4")));
}
