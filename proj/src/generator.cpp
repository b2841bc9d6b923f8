#include "generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rng.hpp"

namespace hypercore {

namespace {

// Community sizes are skewed with a fixed shape; the configurable exponent
// drives the per-node degree skew.
constexpr double kCommunitySizeExponent = 1.7;

void validate(const GenConfig& cfg) {
    if (cfg.node_count < 1) throw ConfigError("node_count must be positive");
    if (cfg.edge_count < 1) throw ConfigError("edge_count must be positive");
    if (cfg.cardinality_min < 1) throw ConfigError("cardinality_min must be >= 1");
    if (cfg.cardinality_max < cfg.cardinality_min) {
        throw ConfigError("cardinality_max must be >= cardinality_min");
    }
    if (cfg.cardinality_max > cfg.node_count) {
        throw ConfigError("cardinality_max exceeds node_count");
    }
    if (!(cfg.noise >= 0.0 && cfg.noise <= 1.0)) throw ConfigError("noise must be in [0,1]");
    if (!(cfg.degree_exponent > 1.0)) throw ConfigError("degree_exponent must be > 1");
    if (cfg.community_count < 1) throw ConfigError("community_count must be >= 1");
}

// Index into a prefix-sum table for one weighted draw.
std::size_t draw_from_cdf(const std::vector<double>& cdf, Xoshiro256ss& rng) {
    const double target = rng.next_double() * cdf.back();
    return static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), target) - cdf.begin());
}

}  // namespace

Hypergraph generate(const GenConfig& cfg) {
    validate(cfg);
    Xoshiro256ss rng(cfg.seed);
    const std::uint64_t n = cfg.node_count;
    const std::uint32_t ncomm =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.community_count, n));

    std::vector<double> comm_cdf(ncomm);
    double acc = 0.0;
    for (std::uint32_t c = 0; c < ncomm; ++c) {
        acc += std::pow(static_cast<double>(c + 1), -kCommunitySizeExponent);
        comm_cdf[c] = acc;
    }

    std::vector<std::vector<NodeId>> community_members(ncomm);
    for (std::uint64_t v = 0; v < n; ++v) {
        const std::size_t c = std::min<std::size_t>(draw_from_cdf(comm_cdf, rng), ncomm - 1);
        community_members[c].push_back(static_cast<NodeId>(v));
    }

    // Per-community weight tables: rank r inside a community gets weight
    // (r+1)^(-1/(a-1)), so low-rank members become hubs.
    const double weight_exponent = 1.0 / (cfg.degree_exponent - 1.0);
    std::vector<std::vector<double>> community_cdf(ncomm);
    for (std::uint32_t c = 0; c < ncomm; ++c) {
        auto& cdf = community_cdf[c];
        cdf.resize(community_members[c].size());
        double sum = 0.0;
        for (std::size_t r = 0; r < cdf.size(); ++r) {
            sum += std::pow(static_cast<double>(r + 1), -weight_exponent);
            cdf[r] = sum;
        }
    }

    std::vector<char> used(n, 0);
    std::vector<NodeId> members;
    std::vector<std::vector<NodeId>> edges;
    edges.reserve(cfg.edge_count);

    auto draw_global_uniform = [&](std::size_t cardinality) {
        while (members.size() < cardinality) {
            const NodeId v = static_cast<NodeId>(rng.next_below(n));
            if (!used[v]) {
                used[v] = 1;
                members.push_back(v);
            }
        }
    };

    for (std::uint64_t j = 0; j < cfg.edge_count; ++j) {
        const std::uint32_t cardinality = static_cast<std::uint32_t>(
            cfg.cardinality_min +
            rng.next_below(cfg.cardinality_max - cfg.cardinality_min + 1));

        members.clear();
        bool community_edge = rng.next_double() >= cfg.noise;
        std::uint32_t chosen = 0;
        if (community_edge) {
            // A community needs enough members to host the edge; fall back to
            // a global draw when none is found in a bounded number of tries.
            community_edge = false;
            for (int attempt = 0; attempt < 64; ++attempt) {
                const auto c = static_cast<std::uint32_t>(
                    std::min<std::size_t>(draw_from_cdf(comm_cdf, rng), ncomm - 1));
                if (community_members[c].size() >= cardinality) {
                    chosen = c;
                    community_edge = true;
                    break;
                }
            }
        }

        if (community_edge) {
            const auto& pool = community_members[chosen];
            const auto& cdf = community_cdf[chosen];
            std::uint64_t attempts = 0;
            const std::uint64_t max_attempts = 32ull * cardinality + 64;
            while (members.size() < cardinality && attempts < max_attempts) {
                ++attempts;
                const std::size_t r = std::min(draw_from_cdf(cdf, rng), pool.size() - 1);
                const NodeId v = pool[r];
                if (!used[v]) {
                    used[v] = 1;
                    members.push_back(v);
                }
            }
            // Skewed rejection can stall near-full pools; finish by scan.
            for (std::size_t r = 0; members.size() < cardinality; ++r) {
                const NodeId v = pool[r];
                if (!used[v]) {
                    used[v] = 1;
                    members.push_back(v);
                }
            }
        } else {
            draw_global_uniform(cardinality);
        }

        for (NodeId v : members) used[v] = 0;
        std::sort(members.begin(), members.end());
        edges.push_back(members);
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    return Hypergraph(std::move(labels), std::move(edges));
}

}  // namespace hypercore
