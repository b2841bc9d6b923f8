// Command-line front end for the hypercore shared library. Data goes to
// stdout (JSON, CSV, or edge-list text); diagnostics go to stderr.
// Exit codes: 0 success, 2 usage, 3 unreadable/malformed input, 4 domain.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercore.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;

int exit_code_for(hc_status status) {
    switch (status) {
        case HC_OK:
            return 0;
        case HC_ERR_CONFIG:
            return kExitUsage;
        case HC_ERR_IO:
        case HC_ERR_PARSE:
        case HC_ERR_VERSION:
            return kExitParse;
        case HC_ERR_DOMAIN:
            return kExitDomain;
        case HC_ERR_INTERNAL:
            break;
    }
    return 1;
}

// Nonzero exit code carrying the library's error message.
struct CommandError {
    int code;
    std::string message;
};

void check(hc_status status) {
    if (status != HC_OK) {
        throw CommandError{exit_code_for(status), std::string(hc_status_name(status)) + ": " +
                                                      hc_last_error()};
    }
}

struct GraphDeleter {
    void operator()(hc_hypergraph* g) const { hc_hypergraph_free(g); }
};
struct NodesetDeleter {
    void operator()(hc_nodeset* s) const { hc_nodeset_free(s); }
};
struct DecompositionDeleter {
    void operator()(hc_decomposition* d) const { hc_decomposition_free(d); }
};
struct IndexDeleter {
    void operator()(hc_index* i) const { hc_index_free(i); }
};

using GraphPtr = std::unique_ptr<hc_hypergraph, GraphDeleter>;
using NodesetPtr = std::unique_ptr<hc_nodeset, NodesetDeleter>;
using DecompositionPtr = std::unique_ptr<hc_decomposition, DecompositionDeleter>;
using IndexPtr = std::unique_ptr<hc_index, IndexDeleter>;

GraphPtr load_graph(const std::string& path) {
    hc_hypergraph* g = nullptr;
    check(hc_hypergraph_load_path(path.c_str(), &g));
    return GraphPtr(g);
}

std::vector<uint32_t> nodeset_ids(const hc_nodeset* set) {
    std::vector<uint32_t> ids(hc_nodeset_size(set));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = hc_nodeset_at(set, i);
    return ids;
}

std::vector<std::string> sorted_labels(const hc_hypergraph* g, const std::vector<uint32_t>& ids) {
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (uint32_t v : ids) labels.emplace_back(hc_hypergraph_label(g, v));
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<std::string> sorted_index_labels(const hc_index* idx, const std::vector<uint32_t>& ids) {
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (uint32_t v : ids) labels.emplace_back(hc_index_label(idx, v));
    std::sort(labels.begin(), labels.end());
    return labels;
}

ordered_json stats_json(const hc_stats& s) {
    ordered_json j;
    j["node_count"] = s.node_count;
    j["edge_count"] = s.edge_count;
    j["avg_degree"] = s.avg_degree;
    j["avg_support"] = s.avg_support;
    j["vertex_density"] = s.vertex_density;
    return j;
}

hc_algorithm parse_algorithm(const std::string& name) {
    if (name == "epa") return HC_ALG_EPA;
    if (name == "naive") return HC_ALG_NAIVE;
    if (name == "oracle") return HC_ALG_ORACLE;
    throw CommandError{kExitUsage, "unknown algorithm '" + name + "'"};
}

// Same tokenization as the edge-list format: whitespace/commas, # comments.
std::vector<std::string> read_label_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CommandError{kExitParse, "cannot open '" + path + "' for reading"};
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        std::string token;
        for (char c : line) {
            if (c == '#') break;
            if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
                if (!token.empty()) labels.push_back(std::move(token));
                token.clear();
            } else {
                token.push_back(c);
            }
        }
        if (!token.empty()) labels.push_back(std::move(token));
    }
    return labels;
}

std::vector<uint32_t> resolve_labels(const hc_hypergraph* g, const std::vector<std::string>& labels) {
    std::vector<uint32_t> ids;
    ids.reserve(labels.size());
    for (const auto& label : labels) {
        uint32_t v = 0;
        check(hc_hypergraph_find(g, label.c_str(), &v));
        ids.push_back(v);
    }
    return ids;
}

// ---- subcommands -------------------------------------------------------

struct CoreOptions {
    std::string input;
    uint32_t k = 0;
    uint32_t g = 0;
    std::string algorithm = "epa";
};

int run_core(const CoreOptions& opt) {
    GraphPtr graph = load_graph(opt.input);
    hc_nodeset* raw = nullptr;
    check(hc_core(graph.get(), opt.k, opt.g, parse_algorithm(opt.algorithm), &raw));
    NodesetPtr result(raw);
    const auto ids = nodeset_ids(result.get());

    hc_stats stats{};
    check(hc_subhypergraph_stats(graph.get(), ids.data(), ids.size(), &stats));

    ordered_json out;
    out["k"] = opt.k;
    out["g"] = opt.g;
    out["nodes"] = sorted_labels(graph.get(), ids);
    out["stats"] = stats_json(stats);
    std::cout << out.dump() << '\n';
    return 0;
}

struct DecomposeOptions {
    std::string input;
    std::string index_path;
    std::string raw_path;
};

int run_decompose(const DecomposeOptions& opt) {
    GraphPtr graph = load_graph(opt.input);
    hc_decomposition* raw = nullptr;
    check(hc_decompose(graph.get(), &raw));
    DecompositionPtr decomposition(raw);

    check(hc_index_save_path(hc_decomposition_index(decomposition.get()), opt.index_path.c_str()));

    uint32_t k_star = 0;
    uint32_t g_star = 0;
    const size_t cores = hc_decomposition_core_count(decomposition.get());
    ordered_json raw_doc = ordered_json::object();
    for (size_t i = 0; i < cores; ++i) {
        uint32_t k = 0;
        uint32_t g = 0;
        hc_nodeset* members = nullptr;
        check(hc_decomposition_core_at(decomposition.get(), i, &k, &g,
                                       opt.raw_path.empty() ? nullptr : &members));
        k_star = std::max(k_star, k);
        g_star = std::max(g_star, g);
        if (members) {
            NodesetPtr owned(members);
            raw_doc[std::to_string(k) + "," + std::to_string(g)] =
                sorted_labels(graph.get(), nodeset_ids(owned.get()));
        }
    }
    if (!opt.raw_path.empty()) {
        std::ofstream out(opt.raw_path);
        if (!out) throw CommandError{kExitParse, "cannot open '" + opt.raw_path + "' for writing"};
        out << raw_doc.dump() << '\n';
    }

    ordered_json summary;
    summary["cores"] = cores;
    summary["k_star"] = k_star;
    summary["g_star"] = g_star;
    summary["index"] = opt.index_path;
    std::cout << summary.dump() << '\n';
    return 0;
}

struct QueryOptions {
    std::string index_path;
    uint32_t k = 0;
    uint32_t g = 0;
};

int run_query(const QueryOptions& opt) {
    hc_index* raw_index = nullptr;
    check(hc_index_load_path(opt.index_path.c_str(), &raw_index));
    IndexPtr index(raw_index);

    hc_nodeset* raw = nullptr;
    check(hc_index_query(index.get(), opt.k, opt.g, &raw));
    NodesetPtr result(raw);

    ordered_json out;
    out["k"] = opt.k;
    out["g"] = opt.g;
    out["nodes"] = sorted_index_labels(index.get(), nodeset_ids(result.get()));
    // The index carries no incidence data, so no stats can be derived here.
    out["stats"] = nullptr;
    std::cout << out.dump() << '\n';
    return 0;
}

struct StatsOptions {
    std::string input;
    std::string nodes_path;
};

int run_stats(const StatsOptions& opt) {
    GraphPtr graph = load_graph(opt.input);
    hc_stats stats{};
    if (opt.nodes_path.empty()) {
        check(hc_stats_all(graph.get(), &stats));
    } else {
        const auto ids = resolve_labels(graph.get(), read_label_file(opt.nodes_path));
        check(hc_subhypergraph_stats(graph.get(), ids.data(), ids.size(), &stats));
    }
    std::cout << stats_json(stats).dump() << '\n';
    return 0;
}

struct GenerateOptions {
    std::string output;
    std::string config_path;
    hc_gen_config cfg{};
    bool has_flag[8] = {false, false, false, false, false, false, false, false};
};

void apply_config_file(hc_gen_config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CommandError{kExitParse, "cannot open '" + path + "' for reading"};
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CommandError{kExitParse, std::string("malformed config: ") + e.what()};
    }
    try {
        if (doc.contains("node_count")) cfg.node_count = doc["node_count"].get<uint64_t>();
        if (doc.contains("edge_count")) cfg.edge_count = doc["edge_count"].get<uint64_t>();
        if (doc.contains("cardinality_min")) cfg.cardinality_min = doc["cardinality_min"].get<uint32_t>();
        if (doc.contains("cardinality_max")) cfg.cardinality_max = doc["cardinality_max"].get<uint32_t>();
        if (doc.contains("degree_exponent")) cfg.degree_exponent = doc["degree_exponent"].get<double>();
        if (doc.contains("community_count")) cfg.community_count = doc["community_count"].get<uint32_t>();
        if (doc.contains("noise")) cfg.noise = doc["noise"].get<double>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw CommandError{kExitParse, std::string("malformed config: ") + e.what()};
    }
}

int run_generate(GenerateOptions& opt, const hc_gen_config& flag_values) {
    hc_gen_config cfg;
    hc_gen_config_defaults(&cfg);
    if (!opt.config_path.empty()) apply_config_file(cfg, opt.config_path);
    // Explicit flags override the config file.
    if (opt.has_flag[0]) cfg.node_count = flag_values.node_count;
    if (opt.has_flag[1]) cfg.edge_count = flag_values.edge_count;
    if (opt.has_flag[2]) cfg.cardinality_min = flag_values.cardinality_min;
    if (opt.has_flag[3]) cfg.cardinality_max = flag_values.cardinality_max;
    if (opt.has_flag[4]) cfg.degree_exponent = flag_values.degree_exponent;
    if (opt.has_flag[5]) cfg.community_count = flag_values.community_count;
    if (opt.has_flag[6]) cfg.noise = flag_values.noise;
    if (opt.has_flag[7]) cfg.seed = flag_values.seed;

    hc_hypergraph* raw = nullptr;
    check(hc_generate(&cfg, &raw));
    GraphPtr graph(raw);
    check(hc_hypergraph_save_path(graph.get(), opt.output.c_str()));
    std::cerr << "generated " << hc_hypergraph_node_count(graph.get()) << " nodes, "
              << hc_hypergraph_edge_count(graph.get()) << " edges -> " << opt.output << '\n';
    return 0;
}

struct BenchOptions {
    std::string input;
    std::vector<uint32_t> ks{5};
    std::vector<uint32_t> gs{5};
    std::vector<std::string> algorithms{"epa"};
    std::vector<uint64_t> sweep_sizes;
    hc_gen_config gen{};
};

void bench_row(std::ostream& out, const std::string& dataset, const hc_hypergraph* graph,
               uint32_t k, uint32_t g, const std::string& algorithm) {
    hc_nodeset* raw = nullptr;
    hc_mem_report report{};
    const auto t0 = std::chrono::steady_clock::now();
    const hc_algorithm alg = parse_algorithm(algorithm);
    if (alg == HC_ALG_ORACLE) {
        check(hc_core(graph, k, g, alg, &raw));
    } else {
        check(hc_core_profiled(graph, k, g, alg, &raw, &report));
    }
    const auto t1 = std::chrono::steady_clock::now();
    NodesetPtr result(raw);
    const double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    out << dataset << ',' << k << ',' << g << ',' << algorithm << ',';
    out.setf(std::ios::fixed);
    out.precision(3);
    out << wall_ms;
    out.unsetf(std::ios::fixed);
    out << ',' << report.peak_bytes << ',' << hc_nodeset_size(result.get()) << '\n';
}

int run_bench(const BenchOptions& opt) {
    std::cout << "dataset,k,g,algorithm,wall_ms,accounted_peak_bytes,result_size\n";
    if (!opt.input.empty()) {
        GraphPtr graph = load_graph(opt.input);
        for (uint32_t g : opt.gs) {
            for (uint32_t k : opt.ks) {
                for (const auto& algorithm : opt.algorithms) {
                    bench_row(std::cout, opt.input, graph.get(), k, g, algorithm);
                }
            }
        }
    }
    for (uint64_t size : opt.sweep_sizes) {
        hc_gen_config cfg = opt.gen;
        cfg.node_count = size;
        cfg.edge_count = size;
        hc_hypergraph* raw = nullptr;
        check(hc_generate(&cfg, &raw));
        GraphPtr graph(raw);
        const std::string dataset = "gen-" + std::to_string(size);
        for (uint32_t g : opt.gs) {
            for (uint32_t k : opt.ks) {
                for (const auto& algorithm : opt.algorithms) {
                    bench_row(std::cout, dataset, graph.get(), k, g, algorithm);
                }
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,g)-core computation, decomposition and index queries on hypergraphs"};
    app.require_subcommand(1);

    CoreOptions core_opt;
    auto* core_cmd = app.add_subcommand("core", "Compute one (k,g)-core");
    core_cmd->add_option("-i,--input", core_opt.input, "edge-list file")->required();
    core_cmd->add_option("-k", core_opt.k, "neighbour threshold k")->required();
    core_cmd->add_option("-g", core_opt.g, "support threshold g")->required();
    core_cmd->add_option("--algorithm", core_opt.algorithm, "epa|naive|oracle")
        ->default_val("epa");

    DecomposeOptions dec_opt;
    auto* dec_cmd = app.add_subcommand("decompose", "Full (k,g)-core decomposition");
    dec_cmd->add_option("-i,--input", dec_opt.input, "edge-list file")->required();
    dec_cmd->add_option("--index", dec_opt.index_path, "skyline index output file")->required();
    dec_cmd->add_option("--raw", dec_opt.raw_path, "also write every nonempty core as JSON");

    QueryOptions query_opt;
    auto* query_cmd = app.add_subcommand("query", "Answer a (k,g)-core from a saved index");
    query_cmd->add_option("--index", query_opt.index_path, "skyline index file")->required();
    query_cmd->add_option("-k", query_opt.k, "neighbour threshold k")->required();
    query_cmd->add_option("-g", query_opt.g, "support threshold g")->required();

    StatsOptions stats_opt;
    auto* stats_cmd = app.add_subcommand("stats", "Subhypergraph statistics");
    stats_cmd->add_option("-i,--input", stats_opt.input, "edge-list file")->required();
    stats_cmd->add_option("--nodes", stats_opt.nodes_path, "label file restricting the node set");

    GenerateOptions gen_opt;
    hc_gen_config gen_flags;
    hc_gen_config_defaults(&gen_flags);
    auto* gen_cmd = app.add_subcommand("generate", "Emit a synthetic hypergraph");
    gen_cmd->add_option("-o,--output", gen_opt.output, "edge-list output file")->required();
    gen_cmd->add_option("--config", gen_opt.config_path, "JSON config file");
    auto* f0 = gen_cmd->add_option("--nodes", gen_flags.node_count, "node count");
    auto* f1 = gen_cmd->add_option("--edges", gen_flags.edge_count, "edge count");
    auto* f2 = gen_cmd->add_option("--card-min", gen_flags.cardinality_min, "min cardinality");
    auto* f3 = gen_cmd->add_option("--card-max", gen_flags.cardinality_max, "max cardinality");
    auto* f4 = gen_cmd->add_option("--degree-exponent", gen_flags.degree_exponent,
                                   "degree skew exponent (> 1)");
    auto* f5 = gen_cmd->add_option("--communities", gen_flags.community_count, "community count");
    auto* f6 = gen_cmd->add_option("--noise", gen_flags.noise, "uniform-edge probability [0,1]");
    auto* f7 = gen_cmd->add_option("--seed", gen_flags.seed, "PRNG seed");

    BenchOptions bench_opt;
    hc_gen_config_defaults(&bench_opt.gen);
    auto* bench_cmd = app.add_subcommand("bench", "Timed (k,g) grid or generator size sweep (CSV)");
    bench_cmd->add_option("-i,--input", bench_opt.input, "edge-list file");
    bench_cmd->add_option("--ks", bench_opt.ks, "k values")->delimiter(',');
    bench_cmd->add_option("--gs", bench_opt.gs, "g values")->delimiter(',');
    bench_cmd->add_option("--algorithms", bench_opt.algorithms, "epa|naive|oracle")
        ->delimiter(',');
    bench_cmd->add_option("--sweep", bench_opt.sweep_sizes, "generator node counts")
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench_opt.gen.seed, "generator seed");
    bench_cmd->add_option("--card-max", bench_opt.gen.cardinality_max, "generator max cardinality");
    bench_cmd->add_option("--noise", bench_opt.gen.noise, "generator noise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(core_cmd)) return run_core(core_opt);
        if (app.got_subcommand(dec_cmd)) return run_decompose(dec_opt);
        if (app.got_subcommand(query_cmd)) return run_query(query_opt);
        if (app.got_subcommand(stats_cmd)) return run_stats(stats_opt);
        if (app.got_subcommand(gen_cmd)) {
            gen_opt.has_flag[0] = f0->count() > 0;
            gen_opt.has_flag[1] = f1->count() > 0;
            gen_opt.has_flag[2] = f2->count() > 0;
            gen_opt.has_flag[3] = f3->count() > 0;
            gen_opt.has_flag[4] = f4->count() > 0;
            gen_opt.has_flag[5] = f5->count() > 0;
            gen_opt.has_flag[6] = f6->count() > 0;
            gen_opt.has_flag[7] = f7->count() > 0;
            return run_generate(gen_opt, gen_flags);
        }
        if (app.got_subcommand(bench_cmd)) {
            if (bench_opt.input.empty() && bench_opt.sweep_sizes.empty()) {
                std::cerr << "bench needs --input or --sweep\n";
                return kExitUsage;
            }
            return run_bench(bench_opt);
        }
    } catch (const CommandError& e) {
        std::cerr << e.message << '\n';
        return e.code;
    }
    return 0;
}
