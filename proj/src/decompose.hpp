#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hypergraph.hpp"

namespace hypercore {

struct CorePair {
    std::uint32_t k = 0;
    std::uint32_t g = 0;

    friend auto operator<=>(const CorePair&, const CorePair&) = default;
};

// Raw cores iterate in ascending (g, k) order so decomposition output files
// are reproducible.
struct OrderByGThenK {
    bool operator()(CorePair a, CorePair b) const {
        return a.g != b.g ? a.g < b.g : a.k < b.k;
    }
};

// Nonempty cores only; members sorted ascending.
using RawCores = std::map<CorePair, std::vector<NodeId>, OrderByGThenK>;

// Per-node maximal (k,g) pairs. A node belongs to the (k,g)-core exactly when
// some stored pair dominates (k,g); pairs are kept sorted by ascending k,
// which makes g strictly descending. Immutable once built; queries are safe
// to run concurrently.
class CorenessSkyline {
public:
    CorenessSkyline() = default;
    // Validates: k,g >= 1 and pairwise non-domination per node. Throws
    // DomainError on violation.
    CorenessSkyline(std::vector<std::string> labels, std::vector<std::vector<CorePair>> pairs);

    std::size_t node_count() const { return labels_.size(); }
    const std::vector<CorePair>& pairs(NodeId v) const;
    const std::string& label(NodeId v) const;

    // {v : some skyline pair dominates (k,g)} == the (k,g)-core membership.
    std::vector<NodeId> query(std::uint32_t k, std::uint32_t g) const;

    // For each k with membership: the largest g' such that v is in the
    // (k,g')-core. g_coreness is the symmetric projection.
    std::map<std::uint32_t, std::uint32_t> k_coreness(NodeId v) const;
    std::map<std::uint32_t, std::uint32_t> g_coreness(NodeId v) const;

    // JSON: {"version":1,"labels":[...],"skylines":[[[k,g],...],...]}
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static CorenessSkyline load(std::istream& in);
    static CorenessSkyline load_file(const std::string& path);

    friend bool operator==(const CorenessSkyline&, const CorenessSkyline&) = default;

private:
    void check_node(NodeId v) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<CorePair>> pairs_;
};

struct DecompositionResult {
    RawCores raw;
    CorenessSkyline skyline;
};

// Full (k,g)-core decomposition. For each g the nodes are grouped into
// buckets by g-neighbour count and peeled for k = 1,2,... while relocating
// decremented survivors between buckets; the g sweep stops once no node has
// a g-neighbour left. The recorded cores are then deduplicated into per-node
// maximal pairs.
DecompositionResult bca(const Hypergraph& g);

// Keeps (k,g) for exactly the members of raw[(k,g)] that are in neither
// raw[(k+1,g)] nor raw[(k,g+1)] (missing keys read as empty).
std::vector<std::vector<CorePair>> deduplicate(const RawCores& raw, std::size_t node_count);

}  // namespace hypercore
