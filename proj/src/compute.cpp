#include "compute.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace hypercore {

namespace {

void check_core_params(std::uint32_t k, std::uint32_t min_support) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (min_support < 1) throw DomainError("g must be >= 1");
}

// Nominal slot widths for the memory meter.
constexpr std::uint64_t kFlagBytes = 1;
constexpr std::uint64_t kCountBytes = 4;
constexpr std::uint64_t kQueueBytes = 4;
constexpr std::uint64_t kPairBytes = 16;  // hash-map entry: key, count, bucket overhead

}  // namespace

const std::uint32_t* GNeighbourMap::find(NodeId u) const {
    auto it = std::lower_bound(counts.begin(), counts.end(), u,
                               [](const auto& entry, NodeId id) { return entry.first < id; });
    if (it == counts.end() || it->first != u) return nullptr;
    return &it->second;
}

namespace detail {

void collect_g_neighbours(const Hypergraph& g, const std::vector<char>& in_set, NodeId v,
                          std::uint32_t min_support, std::vector<std::uint32_t>& scratch,
                          std::vector<NodeId>& touched, std::vector<NodeId>& out,
                          MemoryMeter* meter) {
    touched.clear();
    for (EdgeId e : g.incident_edges(v)) {
        for (NodeId u : g.edge_members(e)) {
            if (u == v || !in_set[u]) continue;
            if (scratch[u]++ == 0) {
                touched.push_back(u);
                if (meter) meter->add(1, kQueueBytes);
            }
        }
    }
    for (NodeId u : touched) {
        if (scratch[u] >= min_support) out.push_back(u);
        scratch[u] = 0;
    }
    if (meter) meter->sub(touched.size(), kQueueBytes);
}

}  // namespace detail

GNeighbourMap g_neighbours(const Hypergraph& g, std::span<const NodeId> candidates, NodeId v,
                           std::uint32_t min_support) {
    g.check_node(v);
    if (min_support < 1) throw DomainError("g must be >= 1");
    std::vector<char> in_set(g.node_count(), 0);
    for (NodeId u : candidates) {
        g.check_node(u);
        in_set[u] = 1;
    }
    if (!in_set[v]) throw DomainError("node is not in the candidate set");

    std::unordered_map<NodeId, std::uint32_t> counts;
    for (EdgeId e : g.incident_edges(v)) {
        for (NodeId u : g.edge_members(e)) {
            if (u != v && in_set[u]) ++counts[u];
        }
    }
    GNeighbourMap out;
    out.owner = v;
    for (const auto& [u, c] : counts) {
        if (c >= min_support) out.counts.emplace_back(u, c);
    }
    std::sort(out.counts.begin(), out.counts.end());
    return out;
}

std::vector<NodeId> epa(const Hypergraph& g, std::uint32_t k, std::uint32_t min_support,
                        MemoryMeter* meter) {
    check_core_params(k, min_support);
    const std::size_t n = g.node_count();

    std::vector<char> in_h(n, 1);
    std::vector<char> queued(n, 0);
    std::vector<std::uint32_t> gcount(n, 0);
    std::vector<std::uint32_t> scratch(n, 0);
    std::vector<NodeId> touched;
    std::vector<NodeId> nbrs;
    std::deque<NodeId> queue;
    if (meter) {
        meter->add(n, kFlagBytes);   // candidate flags
        meter->add(n, kFlagBytes);   // queued flags
        meter->add(n, kCountBytes);  // g-neighbour counts
        meter->add(n, kCountBytes);  // counting scratch
    }

    for (NodeId v = 0; v < n; ++v) {
        nbrs.clear();
        detail::collect_g_neighbours(g, in_h, v, min_support, scratch, touched, nbrs, meter);
        gcount[v] = static_cast<std::uint32_t>(nbrs.size());
        if (gcount[v] < k) {
            queue.push_back(v);
            queued[v] = 1;
            if (meter) meter->add(1, kQueueBytes);
        }
    }

    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        if (meter) meter->sub(1, kQueueBytes);

        // Surviving g-neighbours are recomputed at removal time; only their
        // counts are kept between iterations.
        nbrs.clear();
        detail::collect_g_neighbours(g, in_h, v, min_support, scratch, touched, nbrs, meter);
        in_h[v] = 0;
        gcount[v] = 0;

        for (NodeId w : nbrs) {
            if (queued[w]) continue;  // removed regardless; stale count is fine
            if (gcount[w] > 0) --gcount[w];
            if (gcount[w] < k) {
                queue.push_back(w);
                queued[w] = 1;
                if (meter) meter->add(1, kQueueBytes);
            }
        }
    }

    std::vector<NodeId> result;
    for (NodeId v = 0; v < n; ++v) {
        if (in_h[v]) result.push_back(v);
    }
    return result;
}

std::vector<NodeId> naive_kg_core(const Hypergraph& g, std::uint32_t k, std::uint32_t min_support,
                                  MemoryMeter* meter) {
    check_core_params(k, min_support);
    const std::size_t n = g.node_count();

    std::vector<std::unordered_map<NodeId, std::uint32_t>> maps(n);
    std::vector<char> in_h(n, 1);
    std::vector<char> queued(n, 0);
    std::deque<NodeId> queue;
    if (meter) {
        meter->add(n, kFlagBytes);
        meter->add(n, kFlagBytes);
    }

    for (NodeId v = 0; v < n; ++v) {
        auto& m = maps[v];
        for (EdgeId e : g.incident_edges(v)) {
            for (NodeId u : g.edge_members(e)) {
                if (u == v) continue;
                auto [it, inserted] = m.try_emplace(u, 0u);
                if (inserted && meter) meter->add_pairs(1, kPairBytes);
                ++it->second;
            }
        }
        for (auto it = m.begin(); it != m.end();) {
            if (it->second < min_support) {
                it = m.erase(it);
                if (meter) meter->sub_pairs(1, kPairBytes);
            } else {
                ++it;
            }
        }
        if (m.size() < k) {
            queue.push_back(v);
            queued[v] = 1;
            if (meter) meter->add(1, kQueueBytes);
        }
    }

    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        if (meter) meter->sub(1, kQueueBytes);

        in_h[v] = 0;
        for (const auto& [u, count] : maps[v]) {
            if (!in_h[u]) continue;
            auto& mu = maps[u];
            if (mu.erase(v) && meter) meter->sub_pairs(1, kPairBytes);
            if (!queued[u] && mu.size() < k) {
                queue.push_back(u);
                queued[u] = 1;
                if (meter) meter->add(1, kQueueBytes);
            }
        }
        if (meter) meter->sub_pairs(maps[v].size(), kPairBytes);
        maps[v].clear();
    }

    std::vector<NodeId> result;
    for (NodeId v = 0; v < n; ++v) {
        if (in_h[v]) result.push_back(v);
    }
    return result;
}

MemoryReport peak_aux_memory(CoreAlgorithm algorithm, const Hypergraph& g, std::uint32_t k,
                             std::uint32_t min_support) {
    MemoryMeter meter;
    switch (algorithm) {
        case CoreAlgorithm::epa:
            epa(g, k, min_support, &meter);
            break;
        case CoreAlgorithm::naive:
            naive_kg_core(g, k, min_support, &meter);
            break;
        default:
            throw DomainError("memory accounting covers the epa and naive algorithms only");
    }
    return MemoryReport{meter.peak_entries(), meter.peak_pair_entries(), meter.peak_bytes()};
}

}  // namespace hypercore
