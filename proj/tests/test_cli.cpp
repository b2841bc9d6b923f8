#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string toy() { return std::string(TEST_DATA_DIR) + "/toy.hgr"; }
std::string tmp_file(const std::string& name) { return std::string(TEST_TMP_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("core subcommand") {
    auto result = run_cli("core -i " + toy() + " -k 2 -g 2");
    REQUIRE(result.exit_code == 0);
    auto doc = json::parse(result.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["g"] == 2);
    CHECK(doc["nodes"] == json::array({"x1", "x3", "x4", "x6", "x7", "x8"}));
    CHECK(doc["stats"]["node_count"] == 6);
    CHECK(doc["stats"]["edge_count"] == 4);

    // labels sort lexicographically, so x10 precedes x6
    auto high_k = run_cli("core -i " + toy() + " -k 4 -g 1");
    REQUIRE(high_k.exit_code == 0);
    CHECK(json::parse(high_k.out)["nodes"] ==
          json::array({"x10", "x6", "x7", "x8", "x9"}));

    auto empty = run_cli("core -i " + toy() + " -k 1 -g 3");
    REQUIRE(empty.exit_code == 0);
    auto empty_doc = json::parse(empty.out);
    CHECK(empty_doc["nodes"].empty());
    CHECK(empty_doc["stats"]["node_count"] == 0);
}

TEST_CASE("algorithm choices agree and reruns are byte-identical") {
    const std::string base = "core -i " + toy() + " -k 2 -g 2 --algorithm ";
    auto epa = run_cli(base + "epa");
    auto naive = run_cli(base + "naive");
    auto oracle = run_cli(base + "oracle");
    REQUIRE(epa.exit_code == 0);
    REQUIRE(naive.exit_code == 0);
    REQUIRE(oracle.exit_code == 0);
    CHECK(json::parse(epa.out)["nodes"] == json::parse(naive.out)["nodes"]);
    CHECK(json::parse(epa.out)["nodes"] == json::parse(oracle.out)["nodes"]);

    auto again = run_cli(base + "epa");
    CHECK(epa.out == again.out);
}

TEST_CASE("decompose and query") {
    const std::string index = tmp_file("cli_toy.idx");
    const std::string raw = tmp_file("cli_toy_raw.json");
    auto dec = run_cli("decompose -i " + toy() + " --index " + index + " --raw " + raw);
    REQUIRE(dec.exit_code == 0);
    auto summary = json::parse(dec.out);
    CHECK(summary["cores"] == 6);
    CHECK(summary["k_star"] == 4);
    CHECK(summary["g_star"] == 2);

    auto raw_doc = json::parse(slurp(raw));
    CHECK(raw_doc.size() == 6);
    CHECK(raw_doc["2,2"] == json::array({"x1", "x3", "x4", "x6", "x7", "x8"}));
    CHECK(raw_doc["4,1"] == json::array({"x10", "x6", "x7", "x8", "x9"}));

    auto query = run_cli("query --index " + index + " -k 2 -g 2");
    REQUIRE(query.exit_code == 0);
    auto query_doc = json::parse(query.out);
    auto core_doc = json::parse(run_cli("core -i " + toy() + " -k 2 -g 2").out);
    CHECK(query_doc["nodes"] == core_doc["nodes"]);
    CHECK(query_doc["stats"].is_null());

    auto nothing = run_cli("query --index " + index + " -k 5 -g 1");
    REQUIRE(nothing.exit_code == 0);
    CHECK(json::parse(nothing.out)["nodes"].empty());
}

TEST_CASE("stats subcommand") {
    auto whole = run_cli("stats -i " + toy());
    REQUIRE(whole.exit_code == 0);
    auto doc = json::parse(whole.out);
    CHECK(doc["node_count"] == 11);
    CHECK(doc["edge_count"] == 5);
    CHECK(doc["avg_degree"].get<double>() == doctest::Approx(20.0 / 11.0));

    const std::string nodes = tmp_file("cli_nodes.txt");
    {
        std::ofstream out(nodes);
        out << "# the (2,2)-core\nx1 x3 x4\nx6,x7,x8\n";
    }
    auto subset = run_cli("stats -i " + toy() + " --nodes " + nodes);
    REQUIRE(subset.exit_code == 0);
    auto sub_doc = json::parse(subset.out);
    CHECK(sub_doc["node_count"] == 6);
    CHECK(sub_doc["edge_count"] == 4);
}

TEST_CASE("generate subcommand") {
    const std::string out_a = tmp_file("cli_gen_a.hgr");
    const std::string out_b = tmp_file("cli_gen_b.hgr");
    const std::string flags = " --nodes 150 --edges 200 --card-min 2 --card-max 5 --seed 11";
    REQUIRE(run_cli("generate -o " + out_a + flags).exit_code == 0);
    REQUIRE(run_cli("generate -o " + out_b + flags).exit_code == 0);
    CHECK(slurp(out_a) == slurp(out_b));

    // config file equivalent, flag overrides seed
    const std::string cfg = tmp_file("cli_gen_cfg.json");
    {
        std::ofstream out(cfg);
        out << R"({"node_count":150,"edge_count":200,"cardinality_min":2,)"
            << R"("cardinality_max":5,"seed":12})";
    }
    const std::string out_c = tmp_file("cli_gen_c.hgr");
    REQUIRE(run_cli("generate -o " + out_c + " --config " + cfg + " --seed 11").exit_code == 0);
    CHECK(slurp(out_c) == slurp(out_a));

    auto loaded = run_cli("stats -i " + out_a);
    REQUIRE(loaded.exit_code == 0);
    CHECK(json::parse(loaded.out)["node_count"] <= 150);
}

TEST_CASE("bench subcommand emits the CSV schema") {
    auto result = run_cli("bench -i " + toy() + " --ks 1,2 --gs 1,2 --algorithms epa,naive");
    REQUIRE(result.exit_code == 0);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(result.out);
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 9);  // header + 2*2*2 rows
    CHECK(lines[0] == "dataset,k,g,algorithm,wall_ms,accounted_peak_bytes,result_size");
    CHECK(lines[1].find(",1,1,epa,") != std::string::npos);
    // last row: k=2, g=2, naive, full field count
    CHECK(lines[8].find(",2,2,naive,") != std::string::npos);
    CHECK(std::count(lines[8].begin(), lines[8].end(), ',') == 6);

    auto sweep = run_cli("bench --sweep 200,400 --card-max 6 --seed 2");
    REQUIRE(sweep.exit_code == 0);
    CHECK(sweep.out.find("gen-200,5,5,epa,") != std::string::npos);
    CHECK(sweep.out.find("gen-400,5,5,epa,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("core -i " + toy() + " -g 2").exit_code == 2);   // missing -k
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("bench").exit_code == 2);

    CHECK(run_cli("core -i /does/not/exist -k 1 -g 1").exit_code == 3);
    const std::string bad = tmp_file("cli_bad.hgr");
    {
        std::ofstream out(bad);
        out << "a b\n,,\n";
    }
    CHECK(run_cli("core -i " + bad + " -k 1 -g 1").exit_code == 3);

    const std::string bad_idx = tmp_file("cli_bad.idx");
    {
        std::ofstream out(bad_idx);
        out << R"({"version":1,"labels":["a"],"skylines":[[[1,1],[2,2]]]})";
    }
    CHECK(run_cli("query --index " + bad_idx + " -k 1 -g 1").exit_code == 3);

    CHECK(run_cli("core -i " + toy() + " -k 0 -g 1").exit_code == 4);
    const std::string unknown = tmp_file("cli_unknown.txt");
    {
        std::ofstream out(unknown);
        out << "zz\n";
    }
    CHECK(run_cli("stats -i " + toy() + " --nodes " + unknown).exit_code == 4);

    CHECK(run_cli("generate -o /tmp/x.hgr --nodes 5 --card-max 10").exit_code == 2);
}
