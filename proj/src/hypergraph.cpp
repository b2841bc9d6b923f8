#include "hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hypercore {

namespace {

bool is_valid_utf8(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t extra;
        if (c < 0x80) {
            extra = 0;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
        } else {
            return false;
        }
        if (extra > 0 && i + extra >= n) return false;
        for (std::size_t j = 1; j <= extra; ++j) {
            if ((static_cast<unsigned char>(s[i + j]) & 0xC0) != 0x80) return false;
        }
        i += extra + 1;
    }
    return true;
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ','; }

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (is_separator(s[b]) || s[b] == '\r')) ++b;
    while (e > b && (is_separator(s[e - 1]) || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

}  // namespace

bool Hyperedge::contains(NodeId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<std::vector<NodeId>> edges)
    : labels_(std::move(labels)) {
    label_index_.reserve(labels_.size());
    for (NodeId v = 0; v < labels_.size(); ++v) {
        if (!label_index_.emplace(labels_[v], v).second) {
            throw DomainError("duplicate node label '" + labels_[v] + "'");
        }
    }
    edge_offsets_.reserve(edges.size() + 1);
    edge_offsets_.push_back(0);
    for (auto& members : edges) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!members.empty() && members.back() >= labels_.size()) {
            throw DomainError("edge member id out of range");
        }
        edge_members_.insert(edge_members_.end(), members.begin(), members.end());
        edge_offsets_.push_back(edge_members_.size());
    }
    build_incidence();
}

void Hypergraph::build_incidence() {
    const std::size_t n = labels_.size();
    std::vector<std::size_t> degree(n, 0);
    for (NodeId v : edge_members_) ++degree[v];

    incidence_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        incidence_offsets_[v + 1] = incidence_offsets_[v] + degree[v];
    }
    incidence_flat_.resize(edge_members_.size());
    std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (EdgeId e = 0; e < edge_count(); ++e) {
        for (NodeId v : edge_members(e)) {
            incidence_flat_[cursor[v]++] = e;
        }
    }
}

Hypergraph Hypergraph::parse(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::vector<NodeId>> edges;

    std::string line;
    std::size_t line_no = 0;
    std::vector<NodeId> members;
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_valid_utf8(line)) {
            throw ParseError("invalid UTF-8 in edge list", line_no);
        }
        const std::string_view body = trim(line);
        if (body.empty()) {
            // Blank lines are skipped; a line of bare commas declares an
            // edge that lost all its labels.
            if (line.find(',') != std::string::npos) {
                throw ParseError("empty hyperedge", line_no);
            }
            continue;
        }
        if (body.front() == '#') continue;

        members.clear();
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && (is_separator(body[pos]) || body[pos] == '\r')) ++pos;
            const std::size_t start = pos;
            while (pos < body.size() && !is_separator(body[pos]) && body[pos] != '\r') ++pos;
            if (pos == start) continue;
            std::string token(body.substr(start, pos - start));
            auto [it, inserted] = index.emplace(token, static_cast<NodeId>(labels.size()));
            if (inserted) labels.push_back(std::move(token));
            members.push_back(it->second);
        }
        edges.push_back(members);
    }
    return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph Hypergraph::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

Hypergraph Hypergraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return parse(in);
}

Hyperedge Hypergraph::edge(EdgeId e) const { return Hyperedge{edge_members(e)}; }

std::span<const NodeId> Hypergraph::edge_members(EdgeId e) const {
    if (e >= edge_count()) throw DomainError("edge id out of range");
    return {edge_members_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
}

std::span<const EdgeId> Hypergraph::incident_edges(NodeId v) const {
    check_node(v);
    return {incidence_flat_.data() + incidence_offsets_[v],
            incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

const std::string& Hypergraph::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

std::optional<NodeId> Hypergraph::find_node(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

void Hypergraph::check_node(NodeId v) const {
    if (v >= labels_.size()) {
        throw DomainError("node id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(labels_.size()) + ")");
    }
}

void Hypergraph::serialize(std::ostream& out) const {
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto members = edge_members(e);
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out << ' ';
            out << labels_[members[i]];
        }
        out << '\n';
    }
}

void Hypergraph::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    serialize(out);
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

Hypergraph Hypergraph::induced(std::span<const NodeId> keep) const {
    std::vector<NodeId> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() >= node_count()) {
        throw DomainError("induced node set contains id out of range");
    }

    std::vector<NodeId> remap(node_count(), static_cast<NodeId>(-1));
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (NodeId v : sorted) {
        remap[v] = static_cast<NodeId>(labels.size());
        labels.push_back(labels_[v]);
    }

    std::vector<std::vector<NodeId>> edges;
    std::vector<EdgeId> sources;
    std::vector<NodeId> restricted;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        restricted.clear();
        for (NodeId v : edge_members(e)) {
            if (remap[v] != static_cast<NodeId>(-1)) restricted.push_back(remap[v]);
        }
        if (restricted.size() >= 2) {
            edges.push_back(restricted);
            sources.push_back(e);
        }
    }
    Hypergraph out(std::move(labels), std::move(edges));
    out.source_edges_ = std::move(sources);
    return out;
}

std::uint64_t support(const Hypergraph& g, NodeId u, NodeId v) {
    g.check_node(u);
    g.check_node(v);
    if (u == v) throw DomainError("support is undefined for a node with itself");
    // Scan the smaller incidence list, membership-test the other endpoint.
    if (g.degree(u) > g.degree(v)) std::swap(u, v);
    std::uint64_t count = 0;
    for (EdgeId e : g.incident_edges(u)) {
        if (g.edge(e).contains(v)) ++count;
    }
    return count;
}

SubhypergraphStats subgraph_stats(const Hypergraph& g, std::span<const NodeId> nodes) {
    Hypergraph sub = g.induced(nodes);

    SubhypergraphStats s;
    s.node_count = sub.node_count();
    s.edge_count = sub.edge_count();
    if (s.node_count == 0) return s;

    s.avg_degree = static_cast<double>(sub.total_degree()) / static_cast<double>(s.node_count);
    s.vertex_density = static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);

    // Support of every co-occurring pair in the induced structure.
    std::unordered_map<std::uint64_t, std::uint64_t> pair_counts;
    for (EdgeId e = 0; e < sub.edge_count(); ++e) {
        const auto members = sub.edge_members(e);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(members[i]) << 32) | members[j];
                ++pair_counts[key];
            }
        }
    }
    if (!pair_counts.empty()) {
        std::uint64_t total = 0;
        for (const auto& [key, count] : pair_counts) total += count;
        s.avg_support = static_cast<double>(total) / static_cast<double>(pair_counts.size());
    }
    return s;
}

SubhypergraphStats subgraph_stats(const Hypergraph& g) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    return subgraph_stats(g, all);
}

}  // namespace hypercore
