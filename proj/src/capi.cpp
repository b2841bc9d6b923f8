#include "hypercore.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "compute.hpp"
#include "decompose.hpp"
#include "generator.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"

using namespace hypercore;

struct hc_hypergraph {
    Hypergraph impl;
};

struct hc_nodeset {
    std::vector<NodeId> ids;  // sorted ascending
};

struct hc_index {
    CorenessSkyline impl;
};

struct hc_decomposition {
    RawCores raw;
    hc_index index;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what ? what : ""; }

template <typename Fn>
hc_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return HC_OK;
    } catch (const ParseError& e) {
        set_error(e.what());
        return HC_ERR_PARSE;
    } catch (const VersionError& e) {
        set_error(e.what());
        return HC_ERR_VERSION;
    } catch (const ConfigError& e) {
        set_error(e.what());
        return HC_ERR_CONFIG;
    } catch (const DomainError& e) {
        set_error(e.what());
        return HC_ERR_DOMAIN;
    } catch (const IoError& e) {
        set_error(e.what());
        return HC_ERR_IO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return HC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return HC_ERR_INTERNAL;
    }
}

hc_status require(bool ok, const char* message) {
    if (ok) return HC_OK;
    set_error(message);
    return HC_ERR_DOMAIN;
}

CoreAlgorithm to_algorithm(hc_algorithm algorithm) {
    switch (algorithm) {
        case HC_ALG_EPA:
            return CoreAlgorithm::epa;
        case HC_ALG_NAIVE:
            return CoreAlgorithm::naive;
        case HC_ALG_ORACLE:
            return CoreAlgorithm::oracle;
    }
    throw DomainError("unknown algorithm id");
}

std::vector<NodeId> run_core(const Hypergraph& g, std::uint32_t k, std::uint32_t gval,
                             hc_algorithm algorithm, MemoryMeter* meter) {
    switch (to_algorithm(algorithm)) {
        case CoreAlgorithm::epa:
            return epa(g, k, gval, meter);
        case CoreAlgorithm::naive:
            return naive_kg_core(g, k, gval, meter);
        case CoreAlgorithm::oracle:
            if (meter) throw DomainError("memory accounting covers the epa and naive algorithms only");
            return oracle_kg_core(g, k, gval);
    }
    throw DomainError("unknown algorithm id");
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status status) {
    switch (status) {
        case HC_OK: return "ok";
        case HC_ERR_IO: return "io error";
        case HC_ERR_PARSE: return "parse error";
        case HC_ERR_DOMAIN: return "domain error";
        case HC_ERR_CONFIG: return "config error";
        case HC_ERR_VERSION: return "version error";
        case HC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* hc_last_error(void) { return t_last_error.c_str(); }

/* ---- hypergraph ------------------------------------------------------- */

hc_status hc_hypergraph_load_path(const char* path, hc_hypergraph** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] {
        auto g = new hc_hypergraph{Hypergraph::load_file(path)};
        *out = g;
    });
}

hc_status hc_hypergraph_parse(const char* text, size_t length, hc_hypergraph** out) {
    if (auto s = require(text && out, "null argument")) return s;
    return guarded([&] {
        auto g = new hc_hypergraph{Hypergraph::parse_text(std::string_view(text, length))};
        *out = g;
    });
}

hc_status hc_hypergraph_save_path(const hc_hypergraph* graph, const char* path) {
    if (auto s = require(graph && path, "null argument")) return s;
    return guarded([&] { graph->impl.save_file(path); });
}

void hc_hypergraph_free(hc_hypergraph* graph) { delete graph; }

uint32_t hc_hypergraph_node_count(const hc_hypergraph* graph) {
    return graph ? static_cast<uint32_t>(graph->impl.node_count()) : 0;
}

size_t hc_hypergraph_edge_count(const hc_hypergraph* graph) {
    return graph ? graph->impl.edge_count() : 0;
}

hc_status hc_hypergraph_degree(const hc_hypergraph* graph, uint32_t node, size_t* out) {
    if (auto s = require(graph && out, "null argument")) return s;
    return guarded([&] { *out = graph->impl.degree(node); });
}

const char* hc_hypergraph_label(const hc_hypergraph* graph, uint32_t node) {
    if (!graph || node >= graph->impl.node_count()) return nullptr;
    return graph->impl.label(node).c_str();
}

hc_status hc_hypergraph_find(const hc_hypergraph* graph, const char* label, uint32_t* out_node) {
    if (auto s = require(graph && label && out_node, "null argument")) return s;
    return guarded([&] {
        auto id = graph->impl.find_node(label);
        if (!id) throw DomainError(std::string("unknown node label '") + label + "'");
        *out_node = *id;
    });
}

hc_status hc_support(const hc_hypergraph* graph, uint32_t u, uint32_t v, uint64_t* out) {
    if (auto s = require(graph && out, "null argument")) return s;
    return guarded([&] { *out = support(graph->impl, u, v); });
}

namespace {

void fill_stats(const SubhypergraphStats& stats, hc_stats* out) {
    out->node_count = stats.node_count;
    out->edge_count = stats.edge_count;
    out->avg_degree = stats.avg_degree;
    out->avg_support = stats.avg_support;
    out->vertex_density = stats.vertex_density;
}

}  // namespace

hc_status hc_induced(const hc_hypergraph* graph, const uint32_t* nodes, size_t count,
                     hc_hypergraph** out) {
    if (auto s = require(graph && out && (nodes || count == 0), "null argument")) return s;
    return guarded([&] {
        const std::span<const NodeId> keep(nodes, nodes ? count : 0);
        *out = new hc_hypergraph{graph->impl.induced(keep)};
    });
}

hc_status hc_subhypergraph_stats(const hc_hypergraph* graph, const uint32_t* nodes, size_t count,
                                 hc_stats* out) {
    if (auto s = require(graph && out && (nodes || count == 0), "null argument")) return s;
    return guarded([&] {
        const std::span<const NodeId> keep(nodes, nodes ? count : 0);
        fill_stats(subgraph_stats(graph->impl, keep), out);
    });
}

hc_status hc_stats_all(const hc_hypergraph* graph, hc_stats* out) {
    if (auto s = require(graph && out, "null argument")) return s;
    return guarded([&] { fill_stats(subgraph_stats(graph->impl), out); });
}

/* ---- (k,g)-core ------------------------------------------------------- */

hc_status hc_core(const hc_hypergraph* graph, uint32_t k, uint32_t g, hc_algorithm algorithm,
                  hc_nodeset** out) {
    return hc_core_profiled(graph, k, g, algorithm, out, nullptr);
}

hc_status hc_core_profiled(const hc_hypergraph* graph, uint32_t k, uint32_t g,
                           hc_algorithm algorithm, hc_nodeset** out, hc_mem_report* report) {
    if (auto s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        MemoryMeter meter;
        auto ids = run_core(graph->impl, k, g, algorithm, report ? &meter : nullptr);
        if (report) {
            report->peak_entries = meter.peak_entries();
            report->peak_pair_entries = meter.peak_pair_entries();
            report->peak_bytes = meter.peak_bytes();
        }
        *out = new hc_nodeset{std::move(ids)};
    });
}

size_t hc_nodeset_size(const hc_nodeset* set) { return set ? set->ids.size() : 0; }

uint32_t hc_nodeset_at(const hc_nodeset* set, size_t i) {
    if (!set || i >= set->ids.size()) return UINT32_MAX;
    return set->ids[i];
}

void hc_nodeset_free(hc_nodeset* set) { delete set; }

/* ---- decomposition and coreness index --------------------------------- */

hc_status hc_decompose(const hc_hypergraph* graph, hc_decomposition** out) {
    if (auto s = require(graph && out, "null argument")) return s;
    return guarded([&] {
        DecompositionResult result = bca(graph->impl);
        auto d = new hc_decomposition{std::move(result.raw), hc_index{std::move(result.skyline)}};
        *out = d;
    });
}

void hc_decomposition_free(hc_decomposition* d) { delete d; }

size_t hc_decomposition_core_count(const hc_decomposition* d) { return d ? d->raw.size() : 0; }

hc_status hc_decomposition_core_at(const hc_decomposition* d, size_t i, uint32_t* k, uint32_t* g,
                                   hc_nodeset** members) {
    if (auto s = require(d && k && g, "null argument")) return s;
    if (auto s = require(i < d->raw.size(), "core index out of range")) return s;
    return guarded([&] {
        auto it = d->raw.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(i));
        *k = it->first.k;
        *g = it->first.g;
        if (members) *members = new hc_nodeset{it->second};
    });
}

const hc_index* hc_decomposition_index(const hc_decomposition* d) {
    return d ? &d->index : nullptr;
}

hc_status hc_index_save_path(const hc_index* index, const char* path) {
    if (auto s = require(index && path, "null argument")) return s;
    return guarded([&] { index->impl.save_file(path); });
}

hc_status hc_index_load_path(const char* path, hc_index** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new hc_index{CorenessSkyline::load_file(path)}; });
}

void hc_index_free(hc_index* index) { delete index; }

uint32_t hc_index_node_count(const hc_index* index) {
    return index ? static_cast<uint32_t>(index->impl.node_count()) : 0;
}

const char* hc_index_label(const hc_index* index, uint32_t node) {
    if (!index || node >= index->impl.node_count()) return nullptr;
    return index->impl.label(node).c_str();
}

size_t hc_index_skyline_size(const hc_index* index, uint32_t node) {
    if (!index || node >= index->impl.node_count()) return 0;
    return index->impl.pairs(node).size();
}

hc_status hc_index_skyline_at(const hc_index* index, uint32_t node, size_t i, uint32_t* k,
                              uint32_t* g) {
    if (auto s = require(index && k && g, "null argument")) return s;
    return guarded([&] {
        const auto& pairs = index->impl.pairs(node);
        if (i >= pairs.size()) throw DomainError("skyline pair index out of range");
        *k = pairs[i].k;
        *g = pairs[i].g;
    });
}

hc_status hc_index_query(const hc_index* index, uint32_t k, uint32_t g, hc_nodeset** out) {
    if (auto s = require(index && out, "null argument")) return s;
    return guarded([&] { *out = new hc_nodeset{index->impl.query(k, g)}; });
}

hc_status hc_index_k_coreness(const hc_index* index, uint32_t node, uint32_t k, uint32_t* out_g) {
    if (auto s = require(index && out_g, "null argument")) return s;
    if (auto s = require(k >= 1, "k must be >= 1")) return s;
    return guarded([&] {
        auto projection = index->impl.k_coreness(node);
        auto it = projection.find(k);
        *out_g = it == projection.end() ? 0 : it->second;
    });
}

hc_status hc_index_g_coreness(const hc_index* index, uint32_t node, uint32_t g, uint32_t* out_k) {
    if (auto s = require(index && out_k, "null argument")) return s;
    if (auto s = require(g >= 1, "g must be >= 1")) return s;
    return guarded([&] {
        auto projection = index->impl.g_coreness(node);
        auto it = projection.find(g);
        *out_k = it == projection.end() ? 0 : it->second;
    });
}

/* ---- synthetic generator ---------------------------------------------- */

void hc_gen_config_defaults(hc_gen_config* cfg) {
    if (!cfg) return;
    const GenConfig defaults;
    cfg->node_count = defaults.node_count;
    cfg->edge_count = defaults.edge_count;
    cfg->cardinality_min = defaults.cardinality_min;
    cfg->cardinality_max = defaults.cardinality_max;
    cfg->degree_exponent = defaults.degree_exponent;
    cfg->community_count = defaults.community_count;
    cfg->noise = defaults.noise;
    cfg->seed = defaults.seed;
}

hc_status hc_generate(const hc_gen_config* cfg, hc_hypergraph** out) {
    if (auto s = require(cfg && out, "null argument")) return s;
    return guarded([&] {
        GenConfig config;
        config.node_count = cfg->node_count;
        config.edge_count = cfg->edge_count;
        config.cardinality_min = cfg->cardinality_min;
        config.cardinality_max = cfg->cardinality_max;
        config.degree_exponent = cfg->degree_exponent;
        config.community_count = cfg->community_count;
        config.noise = cfg->noise;
        config.seed = cfg->seed;
        *out = new hc_hypergraph{generate(config)};
    });
}

}  // extern "C"
