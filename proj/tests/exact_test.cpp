#include <doctest.h>

#include "helpers.hpp"
#include "nsd/bipartite_edge.hpp"
#include "nsd/colouring.hpp"
#include "nsd/errors.hpp"
#include "nsd/exact.hpp"
#include "nsd/forest_edge.hpp"
#include "nsd/graph.hpp"

using namespace nsd;

namespace {

search_outcome edge_value(const graph& g, colour_t kmax) {
    search_config cfg;
    cfg.k_max = kmax;
    cfg.mode = colouring_mode::edge;
    return exact_value(g, cfg);
}

search_outcome total_value(const graph& g, colour_t kmax) {
    search_config cfg;
    cfg.k_max = kmax;
    cfg.mode = colouring_mode::total;
    return exact_value(g, cfg);
}

}  // namespace

TEST_CASE("single probes") {
    CHECK(exists_equitable_nsd(complete(4), 3, colouring_mode::edge, 1 << 20).status ==
          feasibility::infeasible);
    CHECK(exists_equitable_nsd(complete_bipartite(3, 3).g, 2, colouring_mode::edge, 1 << 22).status ==
          feasibility::infeasible);

    const graph p3 = parse_edge_list("0 1\n1 2");
    const probe_result p = exists_equitable_nsd(p3, 1, colouring_mode::edge, 1 << 10);
    REQUIRE(p.status == feasibility::feasible);
    REQUIRE(p.edge_witness.has_value());
    CHECK(p.edge_witness->colour.at({0, 1}) == 1);
    CHECK(p.edge_witness->colour.at({1, 2}) == 1);
    CHECK(verify_edge(p3, *p.edge_witness).valid);

    CHECK_THROWS_AS(exists_equitable_nsd(complete(2), 1, colouring_mode::edge, 100), unsupported_error);
}

TEST_CASE("edge values on small complete graphs") {
    CHECK(edge_value(complete(3), 4).value == 3);
    CHECK(edge_value(complete(4), 4).value == 4);
    CHECK(edge_value(complete(5), 4).value == 3);
}

TEST_CASE("edge values on small complete bipartite graphs") {
    CHECK(edge_value(complete_bipartite(2, 2).g, 3).value == 2);
    CHECK(edge_value(complete_bipartite(3, 3).g, 3).value == 3);
    CHECK(edge_value(complete_bipartite(1, 3).g, 2).value == 1);
}

TEST_CASE("total values on small complete graphs") {
    CHECK(total_value(complete(2), 3).value == 2);
    CHECK(total_value(complete(3), 3).value == 3);
    CHECK(total_value(complete(4), 3).value == 3);
}

TEST_CASE("witnesses verify as returned") {
    for (int n : {3, 5}) {
        const search_outcome out = edge_value(complete(n), 4);
        REQUIRE(out.value.has_value());
        REQUIRE(out.edge_witness.has_value());
        CHECK(out.edge_witness->k == *out.value);
        CHECK(verify_edge(complete(n), *out.edge_witness).valid);
    }
    const search_outcome t = total_value(complete(3), 3);
    REQUIRE(t.total_witness.has_value());
    CHECK(verify_total(complete(3), *t.total_witness).valid);
}

TEST_CASE("P4 is the smallest two-colour tree") {
    const graph p4 = parse_edge_list("0 1\n1 2\n2 3");
    const search_outcome out = edge_value(p4, 2);
    CHECK(out.value == 2);
    // the constructive module agrees
    CHECK(colour_forest_edge(p4).k == 2);
}

TEST_CASE("node limits give an indeterminate outcome, never a verdict") {
    search_config cfg;
    cfg.k_max = 3;
    cfg.mode = colouring_mode::edge;
    cfg.node_limit = 5;
    const search_outcome out = exact_value(complete(5), cfg);
    CHECK(out.indeterminate);
    CHECK(!out.value.has_value());
}

TEST_CASE("determinism") {
    const search_outcome a = edge_value(complete(5), 3);
    const search_outcome b = edge_value(complete(5), 3);
    REQUIRE(a.edge_witness.has_value());
    REQUIRE(b.edge_witness.has_value());
    CHECK(a.edge_witness->colour == b.edge_witness->colour);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("forest construction is exactly optimal on small trees") {
    // the one-colour case is decided exactly by the all-ones check, so the
    // returned k must equal the searched optimum
    int checked = 0;
    for (const graph& t : nsd::testing::all_trees_up_to(7)) {
        if (t.n <= 2) continue;
        const auto value = edge_value(t, 2).value;
        REQUIRE(value.has_value());
        CHECK(colour_forest_edge(t).k == *value);
        ++checked;
    }
    CHECK(checked == 23);  // trees on 3..7 vertices
}

TEST_CASE("agreement with constructions on small instances") {
    // complete bipartite: the construction's k is exactly the search's k
    for (int m = 1; m <= 4; ++m) {
        for (int n = m; n <= 4; ++n) {
            if (m == 1 && n == 1) continue;
            if (m + n > 7) continue;  // keep the searches quick
            const search_outcome out = edge_value(complete_bipartite(m, n).g, 3);
            CHECK(out.value == colour_complete_bipartite_edge(m, n).k);
        }
    }
}
