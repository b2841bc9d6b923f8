#include "decompose.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "compute.hpp"

namespace hypercore {

namespace {

constexpr int kIndexFormatVersion = 1;

const std::vector<NodeId>* find_core(const RawCores& raw, CorePair key) {
    auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
}

bool core_contains(const std::vector<NodeId>* members, NodeId v) {
    return members && std::binary_search(members->begin(), members->end(), v);
}

}  // namespace

CorenessSkyline::CorenessSkyline(std::vector<std::string> labels,
                                 std::vector<std::vector<CorePair>> pairs)
    : labels_(std::move(labels)), pairs_(std::move(pairs)) {
    if (labels_.size() != pairs_.size()) {
        throw DomainError("skyline/label arrays differ in length");
    }
    for (auto& node_pairs : pairs_) {
        std::sort(node_pairs.begin(), node_pairs.end(),
                  [](CorePair a, CorePair b) { return a.k < b.k; });
        for (std::size_t i = 0; i < node_pairs.size(); ++i) {
            if (node_pairs[i].k < 1 || node_pairs[i].g < 1) {
                throw DomainError("skyline pair with k or g below 1");
            }
            // Sorted by k: non-domination holds iff k strictly increases and
            // g strictly decreases.
            if (i > 0 && (node_pairs[i].k == node_pairs[i - 1].k ||
                          node_pairs[i].g >= node_pairs[i - 1].g)) {
                throw DomainError("dominated pair in skyline");
            }
        }
    }
}

const std::vector<CorePair>& CorenessSkyline::pairs(NodeId v) const {
    check_node(v);
    return pairs_[v];
}

const std::string& CorenessSkyline::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

void CorenessSkyline::check_node(NodeId v) const {
    if (v >= labels_.size()) {
        throw DomainError("node id " + std::to_string(v) + " not in index");
    }
}

std::vector<NodeId> CorenessSkyline::query(std::uint32_t k, std::uint32_t g) const {
    if (k < 1) throw DomainError("k must be >= 1");
    if (g < 1) throw DomainError("g must be >= 1");
    std::vector<NodeId> result;
    for (NodeId v = 0; v < pairs_.size(); ++v) {
        for (const CorePair& p : pairs_[v]) {
            if (p.k >= k && p.g >= g) {
                result.push_back(v);
                break;
            }
        }
    }
    return result;
}

std::map<std::uint32_t, std::uint32_t> CorenessSkyline::k_coreness(NodeId v) const {
    check_node(v);
    std::map<std::uint32_t, std::uint32_t> out;
    const auto& node_pairs = pairs_[v];
    if (node_pairs.empty()) return out;
    const std::uint32_t max_k = node_pairs.back().k;
    for (std::uint32_t k = 1; k <= max_k; ++k) {
        std::uint32_t best = 0;
        for (const CorePair& p : node_pairs) {
            if (p.k >= k) best = std::max(best, p.g);
        }
        out[k] = best;
    }
    return out;
}

std::map<std::uint32_t, std::uint32_t> CorenessSkyline::g_coreness(NodeId v) const {
    check_node(v);
    std::map<std::uint32_t, std::uint32_t> out;
    const auto& node_pairs = pairs_[v];
    if (node_pairs.empty()) return out;
    std::uint32_t max_g = 0;
    for (const CorePair& p : node_pairs) max_g = std::max(max_g, p.g);
    for (std::uint32_t g = 1; g <= max_g; ++g) {
        std::uint32_t best = 0;
        for (const CorePair& p : node_pairs) {
            if (p.g >= g) best = std::max(best, p.k);
        }
        out[g] = best;
    }
    return out;
}

void CorenessSkyline::save(std::ostream& out) const {
    nlohmann::ordered_json doc;
    doc["version"] = kIndexFormatVersion;
    doc["labels"] = labels_;
    nlohmann::ordered_json skylines = nlohmann::ordered_json::array();
    for (const auto& node_pairs : pairs_) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        for (const CorePair& p : node_pairs) {
            entry.push_back({p.k, p.g});
        }
        skylines.push_back(std::move(entry));
    }
    doc["skylines"] = std::move(skylines);
    out << doc.dump() << '\n';
}

void CorenessSkyline::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save(out);
    if (!out) throw IoError("write to '" + path + "' failed");
}

CorenessSkyline CorenessSkyline::load(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed index file: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("version")) {
            throw ParseError("index file missing version field");
        }
        if (doc["version"].get<int>() != kIndexFormatVersion) {
            throw VersionError("unsupported index version " + doc["version"].dump());
        }
        auto labels = doc.at("labels").get<std::vector<std::string>>();
        std::vector<std::vector<CorePair>> pairs;
        for (const auto& entry : doc.at("skylines")) {
            std::vector<CorePair> node_pairs;
            for (const auto& p : entry) {
                if (!p.is_array() || p.size() != 2) {
                    throw ParseError("skyline pair is not a [k,g] array");
                }
                node_pairs.push_back(CorePair{p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>()});
            }
            pairs.push_back(std::move(node_pairs));
        }
        try {
            return CorenessSkyline(std::move(labels), std::move(pairs));
        } catch (const DomainError& e) {
            throw ParseError(std::string("invalid index: ") + e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed index file: ") + e.what());
    }
}

CorenessSkyline CorenessSkyline::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return load(in);
}

std::vector<std::vector<CorePair>> deduplicate(const RawCores& raw, std::size_t node_count) {
    std::vector<std::vector<CorePair>> out(node_count);
    for (const auto& [pair, members] : raw) {
        const std::vector<NodeId>* up_k = find_core(raw, CorePair{pair.k + 1, pair.g});
        const std::vector<NodeId>* up_g = find_core(raw, CorePair{pair.k, pair.g + 1});
        for (NodeId v : members) {
            if (core_contains(up_k, v) || core_contains(up_g, v)) continue;
            out[v].push_back(pair);
        }
    }
    for (auto& node_pairs : out) {
        std::sort(node_pairs.begin(), node_pairs.end(),
                  [](CorePair a, CorePair b) { return a.k < b.k; });
    }
    return out;
}

DecompositionResult bca(const Hypergraph& g) {
    const std::size_t n = g.node_count();
    RawCores raw;

    std::vector<std::uint32_t> gcount(n, 0);
    std::vector<std::uint32_t> scratch(n, 0);
    std::vector<NodeId> touched;
    std::vector<NodeId> nbrs;

    for (std::uint32_t gval = 1;; ++gval) {
        std::vector<char> in_h(n, 1);
        std::vector<char> queued(n, 0);

        std::uint32_t max_count = 0;
        for (NodeId v = 0; v < n; ++v) {
            nbrs.clear();
            detail::collect_g_neighbours(g, in_h, v, gval, scratch, touched, nbrs);
            gcount[v] = static_cast<std::uint32_t>(nbrs.size());
            max_count = std::max(max_count, gcount[v]);
        }
        // Once nobody has a g-neighbour, every core at this or any higher g
        // is empty.
        if (max_count == 0) break;

        // Buckets hold exactly the alive, not-yet-queued nodes keyed by
        // their current count.
        std::vector<std::unordered_set<NodeId>> buckets(max_count + 1);
        for (NodeId v = 0; v < n; ++v) buckets[gcount[v]].insert(v);

        std::size_t alive = n;
        std::deque<NodeId> queue;
        for (std::uint32_t k = 1; alive > 0; ++k) {
            for (std::uint32_t j = 0; j < k && j < buckets.size(); ++j) {
                for (NodeId v : buckets[j]) {
                    queue.push_back(v);
                    queued[v] = 1;
                }
                buckets[j].clear();
            }

            while (!queue.empty()) {
                const NodeId v = queue.front();
                queue.pop_front();

                nbrs.clear();
                detail::collect_g_neighbours(g, in_h, v, gval, scratch, touched, nbrs);
                in_h[v] = 0;
                --alive;

                for (NodeId w : nbrs) {
                    if (queued[w]) continue;
                    buckets[gcount[w]].erase(w);
                    if (gcount[w] > 0) --gcount[w];
                    if (gcount[w] < k) {
                        queue.push_back(w);
                        queued[w] = 1;
                    } else {
                        buckets[gcount[w]].insert(w);
                    }
                }
            }

            if (alive > 0) {
                std::vector<NodeId> members;
                members.reserve(alive);
                for (NodeId v = 0; v < n; ++v) {
                    if (in_h[v]) members.push_back(v);
                }
                raw.emplace(CorePair{k, gval}, std::move(members));
            }
        }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (NodeId v = 0; v < n; ++v) labels.push_back(g.label(v));

    DecompositionResult result;
    result.skyline = CorenessSkyline(std::move(labels), deduplicate(raw, n));
    result.raw = std::move(raw);
    return result;
}

}  // namespace hypercore
