#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace hypercore {

// Dense node identifier, contiguous in [0, node_count) within one Hypergraph.
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// View into one hyperedge's member list (sorted ascending, duplicate-free).
struct Hyperedge {
    std::span<const NodeId> members;

    std::size_t cardinality() const { return members.size(); }
    bool contains(NodeId v) const;
};

struct SubhypergraphStats {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    double avg_degree = 0.0;
    double avg_support = 0.0;    // mean support over co-occurring node pairs
    double vertex_density = 0.0; // edge_count / node_count
};

// Undirected, unweighted hypergraph. Immutable after construction; safe for
// concurrent readers. External string labels map bijectively onto dense ids
// in first-appearance order. Duplicate hyperedges are retained as distinct
// edges; duplicate labels inside one edge collapse to a single member.
class Hypergraph {
public:
    Hypergraph() = default;

    // Builds from pre-interned edges. Members are sorted and deduplicated,
    // ids are validated against labels.size().
    Hypergraph(std::vector<std::string> labels, std::vector<std::vector<NodeId>> edge_members);

    // Edge-list text: one hyperedge per line, labels separated by spaces,
    // tabs or commas. '#'-prefixed lines are comments, blank lines are
    // skipped. Throws ParseError (with line number) on malformed input.
    static Hypergraph parse(std::istream& in);
    static Hypergraph parse_text(std::string_view text);
    static Hypergraph load_file(const std::string& path);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }

    Hyperedge edge(EdgeId e) const;
    std::span<const NodeId> edge_members(EdgeId e) const;

    // Hyperedge indices containing v.
    std::span<const EdgeId> incident_edges(NodeId v) const;
    std::size_t degree(NodeId v) const { return incident_edges(v).size(); }
    std::uint64_t total_degree() const { return edge_members_.size(); }

    const std::string& label(NodeId v) const;
    std::optional<NodeId> find_node(std::string_view label) const;

    // One line per edge, space-separated external labels.
    void serialize(std::ostream& out) const;
    void save_file(const std::string& path) const;

    // Subhypergraph induced by `keep`: every edge restricted to kept members,
    // retained when at least two members survive. Node ids are re-interned
    // densely; labels carry over; source_edges() records provenance.
    Hypergraph induced(std::span<const NodeId> keep) const;

    // For induced graphs: original edge index per retained edge. Empty for
    // graphs built any other way.
    std::span<const EdgeId> source_edges() const { return source_edges_; }

    void check_node(NodeId v) const;

private:
    void build_incidence();

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
    // Flat CSR storage keeps the peel's inner loops on contiguous memory.
    std::vector<std::size_t> edge_offsets_;  // edge_count + 1
    std::vector<NodeId> edge_members_;
    std::vector<std::size_t> incidence_offsets_;  // node_count + 1
    std::vector<EdgeId> incidence_flat_;
    std::vector<EdgeId> source_edges_;
};

// Number of hyperedges containing both u and v. Symmetric; u == v is a
// DomainError.
std::uint64_t support(const Hypergraph& g, NodeId u, NodeId v);

// Stats of the subhypergraph induced by `nodes` (avg_support averages the
// support of every co-occurring pair in the induced structure).
SubhypergraphStats subgraph_stats(const Hypergraph& g, std::span<const NodeId> nodes);
SubhypergraphStats subgraph_stats(const Hypergraph& g);

}  // namespace hypercore
