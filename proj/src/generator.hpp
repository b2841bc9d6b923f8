#pragma once

#include <cstdint>

#include "hypergraph.hpp"

namespace hypercore {

// Synthetic hypergraph for scalability runs: nodes are assigned to
// communities with power-law sizes, node sampling weights follow a power law
// shaped by degree_exponent, and each edge is drawn either inside one
// community (probability 1 - noise) or uniformly over all nodes. Not a
// faithful reproduction of any published benchmark generator; it exists to
// provide controllable size and skew.
struct GenConfig {
    std::uint64_t node_count = 10'000;
    std::uint64_t edge_count = 10'000;
    std::uint32_t cardinality_min = 1;
    std::uint32_t cardinality_max = 40;
    double degree_exponent = 2.1;
    std::uint32_t community_count = 100;
    double noise = 0.2;
    std::uint64_t seed = 1;
};

// Deterministic for a fixed config (the emitted edge list is byte-identical
// across platforms). Node labels are the decimal ids "0".."n-1". Throws
// ConfigError on invalid configuration.
Hypergraph generate(const GenConfig& cfg);

}  // namespace hypercore
