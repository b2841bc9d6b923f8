#include "oracle.hpp"

#include <algorithm>

namespace hypercore {

namespace {

// Number of alive g-neighbours of v, counted from the raw edge list with
// members restricted to the alive set.
std::size_t alive_g_neighbours(const Hypergraph& g, const std::vector<char>& alive, NodeId v,
                               std::uint32_t min_support, std::vector<std::uint32_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0u);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Hyperedge edge = g.edge(e);
        if (!edge.contains(v)) continue;
        for (NodeId u : edge.members) {
            if (u != v && alive[u]) ++counts[u];
        }
    }
    std::size_t total = 0;
    for (std::uint32_t c : counts) {
        if (c >= min_support) ++total;
    }
    return total;
}

}  // namespace

std::vector<NodeId> oracle_fixpoint(const Hypergraph& g, std::span<const NodeId> start,
                                    std::uint32_t k, std::uint32_t min_support) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (min_support < 1) throw DomainError("g must be >= 1");

    const std::size_t n = g.node_count();
    std::vector<char> alive(n, 0);
    for (NodeId v : start) {
        g.check_node(v);
        alive[v] = 1;
    }

    std::vector<std::uint32_t> counts(n, 0);
    std::vector<NodeId> violators;
    for (;;) {
        violators.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (alive_g_neighbours(g, alive, v, min_support, counts) < k) {
                violators.push_back(v);
            }
        }
        if (violators.empty()) break;
        for (NodeId v : violators) alive[v] = 0;  // simultaneous deletion
    }

    std::vector<NodeId> result;
    for (NodeId v = 0; v < n; ++v) {
        if (alive[v]) result.push_back(v);
    }
    return result;
}

std::vector<NodeId> oracle_kg_core(const Hypergraph& g, std::uint32_t k,
                                   std::uint32_t min_support) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    return oracle_fixpoint(g, all, k, min_support);
}

DecompositionResult oracle_decompose(const Hypergraph& g) {
    const std::size_t n = g.node_count();
    RawCores raw;

    for (std::uint32_t gval = 1;; ++gval) {
        bool any = false;
        for (std::uint32_t k = 1;; ++k) {
            auto core = oracle_kg_core(g, k, gval);
            if (core.empty()) break;
            any = true;
            raw.emplace(CorePair{k, gval}, std::move(core));
        }
        if (!any) break;
    }

    // Direct maximality test per node and recorded core, independent of the
    // deduplication routine under test.
    std::vector<std::vector<CorePair>> pairs(n);
    for (const auto& [pair, members] : raw) {
        auto up_k = raw.find(CorePair{pair.k + 1, pair.g});
        auto up_g = raw.find(CorePair{pair.k, pair.g + 1});
        for (NodeId v : members) {
            const bool in_up_k =
                up_k != raw.end() && std::binary_search(up_k->second.begin(), up_k->second.end(), v);
            const bool in_up_g =
                up_g != raw.end() && std::binary_search(up_g->second.begin(), up_g->second.end(), v);
            if (!in_up_k && !in_up_g) pairs[v].push_back(pair);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (NodeId v = 0; v < n; ++v) labels.push_back(g.label(v));

    DecompositionResult result;
    result.skyline = CorenessSkyline(std::move(labels), std::move(pairs));
    result.raw = std::move(raw);
    return result;
}

}  // namespace hypercore
