#pragma once

#include <string>

#include "nsd/colouring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

// On-disk colouring schema:
//   {"format":"nsd-colouring/v1","mode":"edge"|"total","k":K,
//    "edges":[[u,v,c],...],"vertices":[[v,c],...]}
// "vertices" is omitted in edge mode; edges are listed with u < v, sorted.
struct parsed_colouring {
    bool is_total = false;
    edge_colouring ec;
    total_colouring tc;
};

std::string edge_colouring_to_json(const edge_colouring& c);
std::string total_colouring_to_json(const total_colouring& c);
parsed_colouring parse_colouring_json(const std::string& text);

// DOT export: edge labels are colours, vertex labels are induced sums
// (total mode labels vertices "colour/sum").
std::string to_dot(const graph& g, const parsed_colouring& pc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Sniffs between the edge-list format (lines with spaces) and graph6.
graph load_graph_file(const std::string& path);

}  // namespace nsd
