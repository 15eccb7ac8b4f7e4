#pragma once

#include <cstdint>
#include <optional>

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

enum class colouring_mode { edge, total };

struct search_config {
    colour_t k_max = 1;
    std::int64_t node_limit = 100'000'000;
    colouring_mode mode = colouring_mode::edge;
};

enum class feasibility { feasible, infeasible, limit };

struct probe_result {
    feasibility status = feasibility::infeasible;
    std::optional<edge_colouring> edge_witness;
    std::optional<total_colouring> total_witness;
    std::int64_t nodes = 0;
};

struct search_outcome {
    std::optional<colour_t> value;  // smallest feasible k, when determined
    std::optional<edge_colouring> edge_witness;
    std::optional<total_colouring> total_witness;
    std::int64_t nodes = 0;
    bool indeterminate = false;  // node limit hit before a verdict
};

// Complete backtracking over colour assignments in a fixed element order
// (edges lexicographically; vertices first in total mode) with equitable
// class-capacity pruning and sum-conflict pruning on fully decided pairs.
// Colour values are NOT interchangeable here, so no value symmetry is
// broken; values are tried in ascending order only.
probe_result exists_equitable_nsd(const graph& g, colour_t k, colouring_mode mode,
                                  std::int64_t node_limit);

// Ascending scan k = 1..k_max.
search_outcome exact_value(const graph& g, const search_config& cfg);

}  // namespace nsd
