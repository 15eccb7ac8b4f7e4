#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

using colour_t = std::int64_t;

struct edge_colouring {
    colour_t k = 1;
    std::map<edge, colour_t> colour;
};

struct total_colouring {
    colour_t k = 1;
    std::map<edge, colour_t> edge_colour;
    std::vector<colour_t> vertex_colour;  // indexed by vertex
};

// Exact rational, used for mean sums and deviations.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    rational() = default;
    rational(std::int64_t n, std::int64_t d = 1);

    bool operator==(const rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const rational& o) const { return !(*this == o); }
    bool operator<(const rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const rational& o) const { return num * o.den <= o.num * den; }
    rational operator-(const rational& o) const;
    rational operator+(const rational& o) const;
    bool is_integer() const { return den == 1; }
};

struct sum_profile {
    std::vector<std::int64_t> sums;
    rational mean;
    std::vector<rational> deviations;  // sums[v] - mean; always adds up to 0
};

struct verification_report {
    bool valid = false;
    std::vector<edge> nsd_violations;
    bool equitable = false;
    bool colours_in_range = false;
    std::map<colour_t, std::int64_t> class_sizes;  // used colours only, absent = 0
    std::string notes;
};

sum_profile edge_sums(const graph& g, const edge_colouring& c);
sum_profile total_sums(const graph& g, const total_colouring& c);

// nsd over edges, equitability over the k declared edge classes, range check.
verification_report verify_edge(const graph& g, const edge_colouring& c);

// Same over vertices and edges together.
verification_report verify_total(const graph& g, const total_colouring& c);

// Oracle for d-regular graphs coloured with colours <= 3: checks
// sigma(v) = d3(v) - d1(v) + 2d for every vertex, and, when the 1- and
// 3-classes balance, that the mean is exactly 2d with deviations d3 - d1.
bool deviation_check(const graph& g, const edge_colouring& c);

// Extends a verified equitable edge nsd-colouring to a total one at the same
// k: vertices sorted by induced sum receive colours in blocks sized to even
// out the class counts over V and E together.
total_colouring extend_edge_to_total(const graph& g, const edge_colouring& c);

// Universal fallback: edges in lexicographic order get 1, 2, 4, ...; every
// class has at most one member. Needs |E| <= 62 and no isolated edge.
edge_colouring powers_of_two_colouring(const graph& g);

}  // namespace nsd
