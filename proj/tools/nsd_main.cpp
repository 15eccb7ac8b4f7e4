// nsd: construct, verify and search equitable neighbour-sum-distinguishing
// colourings.
//
// Exit codes: 0 success/valid, 1 invalid colouring, 2 usage or parse error,
// 3 unsupported instance, 4 internal invariant failure.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsd/bipartite_edge.hpp"
#include "nsd/colouring.hpp"
#include "nsd/complete_edge.hpp"
#include "nsd/errors.hpp"
#include "nsd/exact.hpp"
#include "nsd/forest_edge.hpp"
#include "nsd/graph.hpp"
#include "nsd/json_io.hpp"
#include "nsd/total_colouring.hpp"

namespace {

using namespace nsd;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsupported = 3;
constexpr int exit_internal = 4;

std::string class_sizes_string(const std::map<colour_t, std::int64_t>& sizes) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, n] : sizes) {
        if (!first) out << "|";
        out << n;
        first = false;
    }
    return first ? "0" : out.str();
}

void print_matrix(const graph& g, const edge_colouring& c) {
    const sum_profile p = edge_sums(g, c);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            if (j) std::cout << ' ';
            if (i == j) {
                std::cout << '-';
            } else {
                std::cout << c.colour.at(make_edge(i, j));
            }
        }
        std::cout << "  | " << p.sums[i] << "\n";
    }
}

struct colour_args {
    std::string klass;
    int n = -1, m = -1;
    std::string graph_file;
    std::string out_file;
    std::string trace_file;
    bool no_verify = false;
    bool matrix = false;
    bool exact_fallback = false;
};

int run_colour(const colour_args& a) {
    graph g;
    parsed_colouring pc;

    if (a.klass == "complete") {
        if (a.n < 0) throw CLI::ValidationError("--n is required for complete");
        g = complete(std::max(a.n, 1));
        pc.ec = colour_complete_edge(a.n);
    } else if (a.klass == "complete-bipartite") {
        if (a.n < 0 || a.m < 0) throw CLI::ValidationError("--m and --n are required");
        g = complete_bipartite(a.m, a.n).g;
        pc.ec = colour_complete_bipartite_edge(a.m, a.n);
    } else if (a.klass == "forest") {
        if (a.graph_file.empty()) throw CLI::ValidationError("--graph is required for forest");
        g = load_graph_file(a.graph_file);
        std::vector<reduction_step> trace;
        try {
            pc.ec = colour_forest_edge(g, a.trace_file.empty() ? nullptr : &trace);
        } catch (const internal_error& e) {
            if (!a.exact_fallback) throw;
            std::cerr << "construction failed (" << e.what() << "); falling back to exact search\n";
            const probe_result probe = exists_equitable_nsd(g, 2, colouring_mode::edge, 100'000'000);
            if (probe.status != feasibility::feasible) throw;
            pc.ec = *probe.edge_witness;
        }
        if (!a.trace_file.empty()) {
            std::ostringstream t;
            for (const auto& step : trace) {
                t << rule_name(step.rule) << " v=" << step.v << " removed=" << step.removed_edges.size()
                  << "\n";
            }
            write_file(a.trace_file, t.str());
        }
    } else if (a.klass == "bipartite-total") {
        if (a.graph_file.empty()) throw CLI::ValidationError("--graph is required for bipartite-total");
        g = load_graph_file(a.graph_file);
        pc.is_total = true;
        pc.tc = colour_bipartite_total(g);
    } else if (a.klass == "complete-total") {
        if (a.n < 0) throw CLI::ValidationError("--n is required for complete-total");
        g = complete(std::max(a.n, 1));
        pc.is_total = true;
        pc.tc = colour_complete_total(a.n);
    } else if (a.klass == "powers2") {
        if (a.graph_file.empty()) throw CLI::ValidationError("--graph is required for powers2");
        g = load_graph_file(a.graph_file);
        pc.ec = powers_of_two_colouring(g);
    } else {
        throw CLI::ValidationError("unknown --class " + a.klass);
    }

    const colour_t k = pc.is_total ? pc.tc.k : pc.ec.k;
    std::string summary;
    if (!a.no_verify) {
        const verification_report rep = pc.is_total ? verify_total(g, pc.tc) : verify_edge(g, pc.ec);
        if (!rep.valid) {
            std::cerr << "construction produced an invalid colouring: " << rep.notes << "\n";
            return exit_internal;
        }
        summary = "k=" + std::to_string(k) + " valid classes=" + class_sizes_string(rep.class_sizes);
    } else {
        summary = "k=" + std::to_string(k) + " (verification skipped)";
    }

    const std::string payload = pc.is_total ? total_colouring_to_json(pc.tc) : edge_colouring_to_json(pc.ec);
    if (!a.out_file.empty()) {
        write_file(a.out_file, payload + "\n");
        std::cout << summary << "\n";
    } else {
        std::cout << payload << "\n";
        std::cerr << summary << "\n";
    }
    if (a.matrix && !pc.is_total) print_matrix(g, pc.ec);
    return exit_ok;
}

int run_verify(const std::string& graph_file, const std::string& colouring_file) {
    const graph g = load_graph_file(graph_file);
    const parsed_colouring pc = parse_colouring_json(read_file(colouring_file));
    const verification_report rep = pc.is_total ? verify_total(g, pc.tc) : verify_edge(g, pc.ec);
    std::cout << (rep.valid ? "valid" : "invalid") << ": " << rep.notes << "\n";
    if (!rep.valid && !rep.nsd_violations.empty()) {
        std::cout << "conflicting pairs:";
        for (const auto& [u, v] : rep.nsd_violations) std::cout << " (" << u << "," << v << ")";
        std::cout << "\n";
    }
    return rep.valid ? exit_ok : exit_invalid;
}

int run_exact(const std::string& graph_file, const std::string& mode, colour_t kmax,
              std::int64_t node_limit) {
    const graph g = load_graph_file(graph_file);
    search_config cfg;
    cfg.k_max = kmax;
    cfg.node_limit = node_limit;
    cfg.mode = mode == "total" ? colouring_mode::total : colouring_mode::edge;
    const search_outcome out = exact_value(g, cfg);

    json j;
    j["value"] = out.value ? json(*out.value) : json(nullptr);
    if (out.edge_witness) {
        j["witness"] = json::parse(edge_colouring_to_json(*out.edge_witness));
    } else if (out.total_witness) {
        j["witness"] = json::parse(total_colouring_to_json(*out.total_witness));
    } else {
        j["witness"] = nullptr;
    }
    j["nodes"] = out.nodes;
    j["indeterminate"] = out.indeterminate;
    std::cout << j.dump() << "\n";
    return exit_ok;
}

struct experiment_row {
    std::string id;
    std::string size;
    colour_t k = 0;
    bool valid = false;
    std::string class_sizes;
    double millis = 0.0;
};

struct instance {
    std::string id;
    std::string size;
    std::function<std::pair<graph, parsed_colouring>()> build;
};

int run_experiment(const std::string& family, int n_min, int n_max, int count, double p,
                   std::uint64_t seed, const std::string& csv_file, int jobs) {
    std::vector<instance> instances;

    if (family == "complete") {
        for (int n = n_min; n <= n_max; ++n) {
            instances.push_back({"K" + std::to_string(n), std::to_string(n), [n]() {
                                     parsed_colouring pc;
                                     pc.ec = colour_complete_edge(n);
                                     return std::make_pair(complete(n), pc);
                                 }});
        }
    } else if (family == "complete-bipartite") {
        for (int m = 1; m <= n_max; ++m) {
            for (int n = m; n <= n_max; ++n) {
                if (m == 1 && n == 1) continue;
                instances.push_back({"K" + std::to_string(m) + "," + std::to_string(n),
                                     std::to_string(m) + "+" + std::to_string(n), [m, n]() {
                                         parsed_colouring pc;
                                         pc.ec = colour_complete_bipartite_edge(m, n);
                                         return std::make_pair(complete_bipartite(m, n).g, pc);
                                     }});
            }
        }
    } else if (family == "trees") {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n_max - 2)));
            const std::uint64_t s = rng();
            instances.push_back({"tree" + std::to_string(i), std::to_string(n), [n, s]() {
                                     const graph t = random_tree(n, s);
                                     parsed_colouring pc;
                                     pc.ec = colour_forest_edge(t);
                                     return std::make_pair(t, pc);
                                 }});
        }
    } else if (family == "bipartite-total") {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
            const std::uint64_t s = rng();
            instances.push_back({"bip" + std::to_string(i),
                                 std::to_string(m) + "+" + std::to_string(n), [m, n, p, s]() {
                                     const graph b = random_bipartite(m, n, p, s).g;
                                     parsed_colouring pc;
                                     pc.is_total = true;
                                     pc.tc = colour_bipartite_total(b);
                                     return std::make_pair(b, pc);
                                 }});
        }
    } else {
        throw CLI::ValidationError("unknown --family " + family);
    }

    std::vector<experiment_row> rows(instances.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    const int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= instances.size()) return;
                experiment_row row;
                row.id = instances[i].id;
                row.size = instances[i].size;
                const auto start = std::chrono::steady_clock::now();
                try {
                    auto [g, pc] = instances[i].build();
                    const verification_report rep =
                        pc.is_total ? verify_total(g, pc.tc) : verify_edge(g, pc.ec);
                    row.k = pc.is_total ? pc.tc.k : pc.ec.k;
                    row.valid = rep.valid;
                    row.class_sizes = class_sizes_string(rep.class_sizes);
                } catch (const std::exception& e) {
                    row.valid = false;
                    row.class_sizes = std::string("error: ") + e.what();
                }
                row.millis = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
                if (!row.valid) failed = true;
                rows[i] = std::move(row);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "instance,size,k,valid,class_sizes,millis\n";
    for (const auto& row : rows) {
        csv << row.id << "," << row.size << "," << row.k << "," << (row.valid ? 1 : 0) << ","
            << row.class_sizes << "," << row.millis << "\n";
    }
    if (csv_file.empty()) {
        std::cout << csv.str();
    } else {
        write_file(csv_file, csv.str());
        std::cout << rows.size() << " instances, " << (failed ? "with failures" : "all valid") << "\n";
    }
    return failed ? exit_internal : exit_ok;
}

int run_export_dot(const std::string& graph_file, const std::string& colouring_file,
                   const std::string& out_file) {
    const graph g = load_graph_file(graph_file);
    const parsed_colouring pc = parse_colouring_json(read_file(colouring_file));
    // sum computation doubles as a coverage check
    const std::string dot = to_dot(g, pc);
    if (out_file.empty()) {
        std::cout << dot;
    } else {
        write_file(out_file, dot);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable neighbour-sum-distinguishing colourings"};
    app.require_subcommand(1);

    colour_args ca;
    CLI::App* colour = app.add_subcommand("colour", "construct a colouring");
    colour->add_option("--class", ca.klass,
                       "complete|complete-bipartite|forest|bipartite-total|complete-total|powers2")
        ->required();
    colour->add_option("--n", ca.n, "order (complete, complete-total) or right side size");
    colour->add_option("--m", ca.m, "left side size (complete-bipartite)");
    colour->add_option("--graph", ca.graph_file, "graph file (edge list or graph6)");
    colour->add_option("--out", ca.out_file, "write the colouring JSON here");
    colour->add_option("--trace", ca.trace_file, "write the forest reduction trace here");
    colour->add_flag("--no-verify", ca.no_verify, "skip self-verification");
    colour->add_flag("--matrix", ca.matrix, "print the colour matrix (complete graphs)");
    colour->add_flag("--exact-fallback", ca.exact_fallback,
                     "fall back to exact search if the forest construction fails internally");

    std::string graph_file, colouring_file, mode = "edge", out_file, family, csv_file;
    colour_t kmax = 4;
    std::int64_t node_limit = 100'000'000;
    int n_min = 3, n_max = 8, count = 10, jobs = static_cast<int>(std::thread::hardware_concurrency());
    double p = 0.5;
    std::uint64_t seed = 1;

    CLI::App* verify = app.add_subcommand("verify", "verify a colouring against a graph");
    verify->add_option("--graph", graph_file)->required();
    verify->add_option("--colouring", colouring_file)->required();

    CLI::App* exact = app.add_subcommand("exact", "exact smallest k by pruned search");
    exact->add_option("--graph", graph_file)->required();
    exact->add_option("--mode", mode, "edge|total")->check(CLI::IsMember({"edge", "total"}));
    exact->add_option("--kmax", kmax, "largest k to try");
    exact->add_option("--node-limit", node_limit, "search node budget");

    CLI::App* experiment = app.add_subcommand("experiment", "batch runs with a CSV report");
    experiment->add_option("--family", family, "complete|complete-bipartite|trees|bipartite-total")
        ->required();
    experiment->add_option("--n-min", n_min, "first order (complete)");
    experiment->add_option("--n-max", n_max, "last order / size bound");
    experiment->add_option("--max-n", n_max, "alias of --n-max");
    experiment->add_option("--count", count, "number of random instances");
    experiment->add_option("--p", p, "edge probability (bipartite-total)");
    experiment->add_option("--seed", seed, "random seed");
    experiment->add_option("--csv", csv_file, "CSV output path (stdout when omitted)");
    experiment->add_option("--jobs", jobs, "worker threads");

    CLI::App* export_dot = app.add_subcommand("export-dot", "write a DOT rendering");
    export_dot->add_option("--graph", graph_file)->required();
    export_dot->add_option("--colouring", colouring_file)->required();
    export_dot->add_option("--out", out_file, "DOT output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (colour->parsed()) return run_colour(ca);
        if (verify->parsed()) return run_verify(graph_file, colouring_file);
        if (exact->parsed()) return run_exact(graph_file, mode, kmax, node_limit);
        if (experiment->parsed())
            return run_experiment(family, n_min, n_max, count, p, seed, csv_file, jobs);
        if (export_dot->parsed()) return run_export_dot(graph_file, colouring_file, out_file);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported instance: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}
