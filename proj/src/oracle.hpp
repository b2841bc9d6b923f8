#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "decompose.hpp"
#include "hypergraph.hpp"

namespace hypercore {

// Definition-faithful brute force: starting from all nodes, every pass
// recomputes each survivor's g-neighbour count from scratch (pairwise
// support over the restricted edges) and deletes all violators at once,
// until a fixpoint. Shares no algorithm state with epa/naive/bca; used to
// validate them. Deliberately slow.
std::vector<NodeId> oracle_kg_core(const Hypergraph& g, std::uint32_t k, std::uint32_t min_support);

// Same fixpoint started from an arbitrary candidate set (used by the
// maximality check: adding any outside node back must peel it away again).
std::vector<NodeId> oracle_fixpoint(const Hypergraph& g, std::span<const NodeId> start,
                                    std::uint32_t k, std::uint32_t min_support);

// Exhaustive decomposition: oracle cores over the full (k,g) grid until
// empty in both directions, skylines by direct per-node maximality tests.
DecompositionResult oracle_decompose(const Hypergraph& g);

}  // namespace hypercore
