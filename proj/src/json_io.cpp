#include "nsd/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nsd/errors.hpp"

namespace nsd {

using nlohmann::json;

namespace {

json edges_to_json(const std::map<edge, colour_t>& colour) {
    json arr = json::array();
    for (const auto& [e, c] : colour) arr.push_back({e.first, e.second, c});
    return arr;
}

std::map<edge, colour_t> edges_from_json(const json& arr) {
    if (!arr.is_array()) throw parse_error("colouring: \"edges\" must be an array");
    std::map<edge, colour_t> colour;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer()) {
            throw parse_error("colouring: edge entries must be [u,v,c]");
        }
        const int u = item[0].get<int>();
        const int v = item[1].get<int>();
        if (u == v) throw parse_error("colouring: self-loop entry");
        if (!colour.emplace(make_edge(u, v), item[2].get<colour_t>()).second) {
            throw parse_error("colouring: duplicate edge entry");
        }
    }
    return colour;
}

}  // namespace

std::string edge_colouring_to_json(const edge_colouring& c) {
    json j;
    j["format"] = "nsd-colouring/v1";
    j["mode"] = "edge";
    j["k"] = c.k;
    j["edges"] = edges_to_json(c.colour);
    return j.dump();
}

std::string total_colouring_to_json(const total_colouring& c) {
    json j;
    j["format"] = "nsd-colouring/v1";
    j["mode"] = "total";
    j["k"] = c.k;
    j["edges"] = edges_to_json(c.edge_colour);
    json verts = json::array();
    for (std::size_t v = 0; v < c.vertex_colour.size(); ++v) {
        verts.push_back({static_cast<int>(v), c.vertex_colour[v]});
    }
    j["vertices"] = verts;
    return j.dump();
}

parsed_colouring parse_colouring_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("colouring: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "nsd-colouring/v1") {
        throw parse_error("colouring: missing or unknown \"format\"");
    }
    const std::string mode = j.value("mode", "");
    if (mode != "edge" && mode != "total") throw parse_error("colouring: \"mode\" must be edge or total");
    if (!j.contains("k") || !j["k"].is_number_integer()) throw parse_error("colouring: missing integer \"k\"");

    parsed_colouring pc;
    const colour_t k = j["k"].get<colour_t>();
    auto colour = edges_from_json(j.value("edges", json::array()));
    if (mode == "edge") {
        if (j.contains("vertices")) throw parse_error("colouring: edge mode must not carry \"vertices\"");
        pc.is_total = false;
        pc.ec.k = k;
        pc.ec.colour = std::move(colour);
        return pc;
    }
    pc.is_total = true;
    pc.tc.k = k;
    pc.tc.edge_colour = std::move(colour);
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw parse_error("colouring: total mode requires \"vertices\"");
    }
    std::map<int, colour_t> verts;
    for (const auto& item : j["vertices"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw parse_error("colouring: vertex entries must be [v,c]");
        }
        if (!verts.emplace(item[0].get<int>(), item[1].get<colour_t>()).second) {
            throw parse_error("colouring: duplicate vertex entry");
        }
    }
    int expect = 0;
    for (const auto& [v, c] : verts) {
        if (v != expect++) throw parse_error("colouring: vertices must cover 0..n-1");
        pc.tc.vertex_colour.push_back(c);
    }
    return pc;
}

std::string to_dot(const graph& g, const parsed_colouring& pc) {
    std::ostringstream out;
    out << "graph nsd {\n";
    if (pc.is_total) {
        const sum_profile p = total_sums(g, pc.tc);
        for (int v = 0; v < g.n; ++v) {
            out << "  " << v << " [label=\"" << pc.tc.vertex_colour[v] << "/" << p.sums[v] << "\"];\n";
        }
        for (const auto& e : g.edges) {
            out << "  " << e.first << " -- " << e.second << " [label=\"" << pc.tc.edge_colour.at(e)
                << "\"];\n";
        }
    } else {
        const sum_profile p = edge_sums(g, pc.ec);
        for (int v = 0; v < g.n; ++v) {
            out << "  " << v << " [label=\"" << p.sums[v] << "\"];\n";
        }
        for (const auto& e : g.edges) {
            out << "  " << e.first << " -- " << e.second << " [label=\"" << pc.ec.colour.at(e) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << content;
}

graph load_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) continue;
        const bool spaced = line.find_first_of(" \t", i) != std::string::npos;
        return spaced ? parse_edge_list(text) : parse_graph6(text);
    }
    return parse_edge_list(text);  // empty input: empty edge list, n = 0
}

}  // namespace nsd
