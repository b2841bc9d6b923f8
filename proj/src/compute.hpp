#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypergraph.hpp"
#include "memory_meter.hpp"

namespace hypercore {

// g-neighbours of one node: co-occurrence counts restricted to a candidate
// set, filtered at threshold g. counts is sorted by node id; the owner never
// appears in it.
struct GNeighbourMap {
    NodeId owner = 0;
    std::vector<std::pair<NodeId, std::uint32_t>> counts;

    std::size_t size() const { return counts.size(); }
    const std::uint32_t* find(NodeId u) const;
};

// Co-occurrence counts of v against every other member of `candidates`,
// filtered to counts >= g. Only hyperedge members inside the candidate set
// are considered. v must be a candidate.
GNeighbourMap g_neighbours(const Hypergraph& g, std::span<const NodeId> candidates, NodeId v,
                           std::uint32_t min_support);

enum class CoreAlgorithm { epa, naive, oracle };

// The (k,g)-core: unique maximal node set in which every node has at least
// k g-neighbours inside the induced candidate structure. Peels with a FIFO
// of violators while tracking only a per-node neighbour count; the counts of
// a removed node's surviving g-neighbours are decremented (clamped at zero,
// nodes already queued are left stale). Auxiliary state is O(|V|) slots.
// Returns the surviving ids sorted ascending; empty is a legal result.
std::vector<NodeId> epa(const Hypergraph& g, std::uint32_t k, std::uint32_t min_support,
                        MemoryMeter* meter = nullptr);

// Baseline that keeps the full g-neighbour map of every node alive for the
// whole peel and deletes reciprocal entries on removal. Same result as epa
// on every input; worst-case per-pair storage. Kept for memory contrast.
std::vector<NodeId> naive_kg_core(const Hypergraph& g, std::uint32_t k, std::uint32_t min_support,
                                  MemoryMeter* meter = nullptr);

// High-water mark of algorithm-owned auxiliary structures for one run.
MemoryReport peak_aux_memory(CoreAlgorithm algorithm, const Hypergraph& g, std::uint32_t k,
                             std::uint32_t min_support);

namespace detail {

// Shared peeling primitive: co-occurrence counts of v over the flagged
// candidate set. scratch is a zeroed node_count-sized array and is zeroed
// again before returning; out receives the ids with count >= min_support in
// first-touch order.
void collect_g_neighbours(const Hypergraph& g, const std::vector<char>& in_set, NodeId v,
                          std::uint32_t min_support, std::vector<std::uint32_t>& scratch,
                          std::vector<NodeId>& touched, std::vector<NodeId>& out,
                          MemoryMeter* meter = nullptr);

}  // namespace detail

}  // namespace hypercore
