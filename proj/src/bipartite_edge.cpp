#include "nsd/bipartite_edge.hpp"

#include <string>

#include "nsd/errors.hpp"

namespace nsd {

namespace {

// Row pattern for even side size: all edges at v_i get 1 when the 1-based
// row index is odd, 2 when it is even. Rows are X-side, columns Y-side.
colour_t even_pattern(int row_idx0) { return row_idx0 % 2 == 0 ? 1 : 2; }

}  // namespace

edge_colouring colour_complete_bipartite_edge(int m, int n) {
    if (m < 1 || n < 1) throw unsupported_error("complete bipartite graph requires m,n >= 1");
    if (m == 1 && n == 1) throw unsupported_error("K_{1,1} is an isolated edge");
    const graph g = complete_bipartite(m, n).g;

    edge_colouring c;
    if (m != n) {
        // degrees already distinguish the sides
        c.k = 1;
        for (const auto& e : g.edges) c.colour[e] = 1;
    } else if (n == 3) {
        c.k = 3;
        const colour_t table[3][3] = {{1, 2, 3}, {1, 2, 3}, {1, 3, 2}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c.colour[{i, 3 + j}] = table[i][j];
    } else if (n % 2 == 0) {
        c.k = 2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c.colour[{i, n + j}] = even_pattern(i);
    } else {
        // odd n >= 5: even pattern on the leading (n-1)x(n-1) block, last
        // row all 1, last column all 2, corner 1
        c.k = 2;
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) c.colour[{i, n + j}] = even_pattern(i);
        for (int j = 0; j + 1 < n; ++j) c.colour[{n - 1, n + j}] = 1;
        for (int i = 0; i + 1 < n; ++i) c.colour[{i, 2 * n - 1}] = 2;
        c.colour[{n - 1, 2 * n - 1}] = 1;
    }

    const verification_report rep = verify_edge(g, c);
    if (!rep.valid) {
        throw internal_error("complete bipartite construction failed verification for K_{" +
                             std::to_string(m) + "," + std::to_string(n) + "}: " + rep.notes);
    }
    if (m == n) {
        // the class counts are exact: equal halves for even n, 1-class one
        // larger for odd n
        const std::int64_t ones = rep.class_sizes.count(1) ? rep.class_sizes.at(1) : 0;
        const std::int64_t twos = rep.class_sizes.count(2) ? rep.class_sizes.at(2) : 0;
        const std::int64_t total = static_cast<std::int64_t>(n) * n;
        if (n != 3) {
            const bool ok = (n % 2 == 0) ? (ones == total / 2 && twos == total / 2)
                                         : (ones == twos + 1 && ones + twos == total);
            if (!ok) throw internal_error("complete bipartite class counts off for n=" + std::to_string(n));
        }
    }
    return c;
}

}  // namespace nsd
