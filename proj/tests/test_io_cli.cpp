#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ggmident/errors.hpp"
#include "ggmident/identify.hpp"
#include "ggmident/io.hpp"
#include "ggmident/linalg.hpp"
#include "support.hpp"

using namespace ggmident;
using namespace ggmident::testsupport;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "ggmident_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(GGM_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

// Minimal JSON-schema walker covering the subset the shipped schema uses:
// type, required, properties, items, enum, minItems, maxItems.
bool matches_type(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

void validate_schema(const json& value, const json& schema, const std::string& where) {
    if (schema.contains("type")) {
        const json& type = schema["type"];
        bool ok = false;
        if (type.is_string()) {
            ok = matches_type(value, type.get<std::string>());
        } else {
            for (const auto& t : type) ok = ok || matches_type(value, t.get<std::string>());
        }
        if (!ok) FAIL(where, ": type mismatch, got ", value.type_name());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& candidate : schema["enum"]) ok = ok || candidate == value;
        if (!ok) FAIL(where, ": value not in enum: ", value.dump());
    }
    if (value.is_object() && schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>()))
                FAIL(where, ": missing required key ", key.get<std::string>());
        }
    }
    if (value.is_object() && schema.contains("properties")) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key)) validate_schema(value[key], sub, where + "." + key);
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            FAIL(where, ": too few items");
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            FAIL(where, ": too many items");
        if (schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i)
                validate_schema(value[i], schema["items"], where + "[" + std::to_string(i) + "]");
        }
    }
}

void validate_report(const json& report) {
    static const json schema = json::parse(read_file(std::string(GGM_SCHEMA_PATH)));
    validate_schema(report, schema, "report");
}

}  // namespace

TEST_CASE("matrix file round trip") {
    const GroundTruthModel model = model_for(path_graph(4), 51, 1);
    const std::string path = path_of("roundtrip.sigma.txt");
    write_matrix_file(path, model.sigma);
    const SymMatrix loaded = read_matrix_file(path);
    CHECK(loaded == model.sigma);  // 17 significant digits survive
}

TEST_CASE("matrix file parse errors name the line") {
    const std::string truncated = path_of("truncated.txt");
    write_file(truncated, "3\n1 0 0\n0 1 0\n");
    CHECK_THROWS_WITH_AS(read_matrix_file(truncated),
                         doctest::Contains("truncated.txt:3"), ParseError);

    const std::string bad_token = path_of("bad_token.txt");
    write_file(bad_token, "2\n1 x\n0 1\n");
    CHECK_THROWS_WITH_AS(read_matrix_file(bad_token), doctest::Contains("bad_token.txt:2"),
                         ParseError);

    const std::string wrong_count = path_of("wrong_count.txt");
    write_file(wrong_count, "2\n1 0 5\n0 1\n");
    CHECK_THROWS_WITH_AS(read_matrix_file(wrong_count),
                         doctest::Contains("expected 2 values, found 3"), ParseError);

    const std::string asymmetric = path_of("asym.txt");
    write_file(asymmetric, "2\n1 0.5\n0.1 1\n");
    CHECK_THROWS_AS(read_matrix_file(asymmetric), ParseError);

    CHECK_THROWS_AS(read_matrix_file(path_of("missing.txt")), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string path = path_of("commented.txt");
    write_file(path, "# a matrix\n2\n\n1 0\n# middle\n0 1\n");
    const SymMatrix m = read_matrix_file(path);
    CHECK(m.dim() == 2);
    CHECK(m(1, 1) == 1.0);
}

TEST_CASE("samples file round trip and scatter") {
    const GroundTruthModel model = model_for(path_graph(3), 52, 1);
    const Eigen::MatrixXd rows = sample_rows(model, 20, 3);
    const std::string path = path_of("samples.txt");
    write_samples_file(path, rows);

    const SampleMatrix loaded = read_samples_file(path);
    CHECK(loaded.n() == 20);
    CHECK(loaded.p() == 3);
    CHECK((loaded.rows - rows).cwiseAbs().maxCoeff() == 0.0);

    const ScatterData plain = scatter_from_samples(loaded, false);
    CHECK(plain.n == 20);
    CHECK((plain.s_mat.dense() - rows.transpose() * rows).cwiseAbs().maxCoeff() < 1e-12);

    // Centering removes the mean: column sums of the centered data vanish,
    // so the centered scatter differs once means are nonzero.
    Eigen::MatrixXd shifted = rows;
    shifted.col(0).array() += 5.0;
    write_samples_file(path, shifted);
    const ScatterData centered = scatter_from_samples(read_samples_file(path), true);
    CHECK(centered.s_mat(1, 1) < shifted.col(0).squaredNorm());
}

TEST_CASE("edge list round trip") {
    const Graph g = example2_graph(7);
    const std::string path = path_of("edges.txt");
    write_edge_list(path, g);
    const Graph loaded = read_edge_list(path, 7);
    CHECK(loaded == g);

    write_file(path_of("bad_edges.txt"), "1 2\n2\n");
    CHECK_THROWS_WITH_AS(read_edge_list(path_of("bad_edges.txt"), 4),
                         doctest::Contains("bad_edges.txt:2"), ParseError);
}

TEST_CASE("cli: gen is byte-identical across runs") {
    const std::string prefix_a = path_of("det_a");
    const std::string prefix_b = path_of("det_b");
    CHECK(run_cli("gen --family tree --p 8 --seed 7 --out " + prefix_a).exit_code == 0);
    CHECK(run_cli("gen --family tree --p 8 --seed 7 --out " + prefix_b).exit_code == 0);
    for (const char* suffix : {".edges.txt", ".sigma.txt", ".omega.txt", ".meta.json"}) {
        CHECK(read_file(prefix_a + suffix) == read_file(prefix_b + suffix));
    }
}

TEST_CASE("cli: gen example metadata") {
    const std::string prefix = path_of("ex1");
    CHECK(run_cli("gen --family example1 --p 6 --seed 3 --out " + prefix).exit_code == 0);
    const json meta = json::parse(read_file(prefix + ".meta.json"));
    CHECK(meta["edge_count"] == 9);
    CHECK(meta["rng"] == "mt19937_64/box-muller");

    const std::string prefix2 = path_of("ex2");
    CHECK(run_cli("gen --family example2 --p 7 --seed 3 --out " + prefix2).exit_code == 0);
    const json meta2 = json::parse(read_file(prefix2 + ".meta.json"));
    CHECK(meta2["hubs"] == json::array({6, 7}));

    CHECK(run_cli("gen --family nosuch --p 6 --seed 1 --out " + path_of("x")).exit_code == 2);
}

TEST_CASE("cli: check-degree fixtures and exit codes") {
    const std::string chain = path_of("chain10");
    REQUIRE(run_cli("gen --family chain --p 5 --seed 9 --out " + chain).exit_code == 0);
    const std::string report_path = path_of("degree_report.json");
    const CliResult good = run_cli("check-degree --input " + chain + ".sigma.txt --k 2 --out " +
                                   report_path);
    CHECK(good.exit_code == 0);
    const json report = json::parse(read_file(report_path));
    validate_report(report);
    CHECK(report["command"] == "check-degree");
    CHECK(report["verdict"] == true);
    CHECK(report["recovered_edges"].size() == 4);
    CHECK(report["neighborhoods"]["2"] == json::array({1, 3}));

    const std::string star = path_of("star5");
    REQUIRE(run_cli("gen --family star --p 5 --seed 9 --out " + star).exit_code == 0);
    const CliResult bad = run_cli("check-degree --input " + star + ".sigma.txt --k 3");
    CHECK(bad.exit_code == 1);

    // Truncated input: diagnostic on the error stream names the line.
    const std::string truncated = path_of("trunc.sigma.txt");
    write_file(truncated, "4\n1 0 0 0\n0 1 0 0\n");
    const CliResult broken = run_cli("check-degree --input " + truncated + " --k 2");
    CHECK(broken.exit_code == 2);
    CHECK(broken.output.find("trunc.sigma.txt:3") != std::string::npos);
}

TEST_CASE("cli: check-strong-sep on the example1 bundle") {
    const std::string prefix = path_of("ex1_sep");
    REQUIRE(run_cli("gen --family example1 --p 6 --seed 21 --out " + prefix).exit_code == 0);
    const std::string report_path = path_of("sep_report.json");
    const CliResult result = run_cli("check-strong-sep --input " + prefix +
                                     ".sigma.txt --k 3 --out " + report_path);
    CHECK(result.exit_code == 1);
    const json report = json::parse(read_file(report_path));
    validate_report(report);
    CHECK(report["verdict"] == false);
    bool unresolved_21 = false;
    for (const auto& c : report["classifications"]) {
        if (c["u"] == 2 && c["v"] == 1 && c["status"] == "unresolved") unresolved_21 = true;
    }
    CHECK(unresolved_21);
}

TEST_CASE("cli: find-fvs fixtures") {
    const std::string ex2 = path_of("fvs_ex2");
    REQUIRE(run_cli("gen --family example2 --p 7 --seed 31 --out " + ex2).exit_code == 0);
    const std::string report_path = path_of("fvs_report.json");
    const CliResult result =
        run_cli("find-fvs --input " + ex2 + ".sigma.txt --k 1 --ell 2 --out " + report_path);
    CHECK(result.exit_code == 0);
    const json report = json::parse(read_file(report_path));
    validate_report(report);
    bool found = false;
    for (const auto& candidate : report["qualifying"]) {
        if (candidate["fvs"] == json::array({6, 7})) {
            found = true;
            CHECK(candidate["residual_edges"] ==
                  json::array({{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
        }
    }
    CHECK(found);

    const std::string tree = path_of("fvs_tree");
    REQUIRE(run_cli("gen --family tree --p 6 --seed 32 --out " + tree).exit_code == 0);
    const CliResult singles =
        run_cli("find-fvs --input " + tree + ".sigma.txt --k 1 --ell 1 --out " + report_path);
    CHECK(singles.exit_code == 0);
    CHECK(json::parse(read_file(report_path))["qualifying"].size() == 6);

    const std::string ex1 = path_of("fvs_ex1");
    REQUIRE(run_cli("gen --family example1 --p 6 --seed 33 --out " + ex1).exit_code == 0);
    CHECK(run_cli("find-fvs --input " + ex1 + ".sigma.txt --k 1 --ell 0").exit_code == 1);
    CHECK(run_cli("find-fvs --input " + ex1 + ".sigma.txt --k 1 --ell 5").exit_code == 2);
}

TEST_CASE("cli: round trip reproduces the in-memory verdict exactly") {
    for (std::uint64_t seed : {41ULL, 42ULL, 43ULL}) {
        const ModelSpec spec{7, GraphFamily::kDegreeBounded, 2, 0, 0.2, 0.4, seed};
        const GroundTruthModel model = make_model(spec, 2);
        const auto oracle = exact_oracle_for(model);
        const IdentificationReport direct = identify_strongly_separable(*oracle, 2);

        const std::string prefix = path_of("round" + std::to_string(seed));
        REQUIRE(run_cli("gen --family degree-bounded --p 7 --k 2 --seed " +
                        std::to_string(seed) + " --out " + prefix)
                    .exit_code == 0);
        const std::string report_path = prefix + ".report.json";
        const CliResult result = run_cli("check-strong-sep --input " + prefix +
                                         ".sigma.txt --k 2 --out " + report_path);
        CHECK(result.exit_code == (direct.verdict ? 0 : 1));
        const json report = json::parse(read_file(report_path));
        json expected_edges = json::array();
        for (const Edge& e : direct.recovered_edges) expected_edges.push_back({e.first, e.second});
        CHECK(report["recovered_edges"] == expected_edges);
    }
}

TEST_CASE("cli: sample then check in sample mode") {
    const std::string prefix = path_of("sm_chain");
    REQUIRE(run_cli("gen --family chain --p 8 --seed 55 --beta-cap 1 --out " + prefix).exit_code ==
            0);
    const std::string samples = prefix + ".samples.txt";
    REQUIRE(run_cli("sample --input " + prefix + ".sigma.txt --n 4000 --seed 5 --out " + samples)
                .exit_code == 0);

    const json meta = json::parse(read_file(prefix + ".meta.json"));
    const double beta = meta["beta"].get<double>();
    const std::string report_path = path_of("sm_report.json");
    const CliResult result =
        run_cli("check-strong-sep --mode sample --samples " + samples + " --k 1 --beta " +
                std::to_string(beta) + " --out " + report_path);
    // Margin-calibrated at n = 4000: this fixed seed recovers the chain.
    CHECK(result.exit_code == 0);
    const json report = json::parse(read_file(report_path));
    validate_report(report);
    CHECK(report["notes"]["alpha_source"] == "beta_halved");
    CHECK(report["notes"].contains("sample_mode_caveat"));
    CHECK(report["recovered_edges"].size() == 7);

    // Scatter + n route: build the scatter from the samples and pass it in.
    const SampleMatrix loaded = read_samples_file(samples);
    const ScatterData scatter = scatter_from_samples(loaded, false);
    const std::string scatter_path = path_of("sm_scatter.txt");
    write_matrix_file(scatter_path, scatter.s_mat);
    const CliResult via_scatter =
        run_cli("check-strong-sep --mode sample --scatter " + scatter_path + " --n 4000 --k 1 " +
                "--beta " + std::to_string(beta) + " --out " + report_path);
    CHECK(via_scatter.exit_code == 0);
    CHECK(json::parse(read_file(report_path))["recovered_edges"].size() == 7);

    // Default threshold path (no alpha, no beta) still runs end to end.
    const CliResult defaulted =
        run_cli("check-degree --mode sample --samples " + samples + " --k 2 --out " + report_path);
    CHECK((defaulted.exit_code == 0 || defaulted.exit_code == 1));
    CHECK(json::parse(read_file(report_path))["notes"]["alpha_source"] == "default_heuristic");
}

TEST_CASE("cli: sample-mode exit agrees with exact mode across seeds") {
    const std::string prefix = path_of("agree_tree");
    REQUIRE(run_cli("gen --family tree --p 6 --seed 77 --beta-cap 1 --out " + prefix).exit_code ==
            0);
    const json meta = json::parse(read_file(prefix + ".meta.json"));
    const std::string beta = std::to_string(meta["beta"].get<double>());

    const int exact_exit =
        run_cli("check-strong-sep --input " + prefix + ".sigma.txt --k 1").exit_code;
    CHECK(exact_exit == 0);  // trees are strongly 1-separable

    int matches = 0;
    for (int seed = 1; seed <= 50; ++seed) {
        const std::string samples = prefix + ".s" + std::to_string(seed) + ".txt";
        REQUIRE(run_cli("sample --input " + prefix + ".sigma.txt --n 4000 --seed " +
                        std::to_string(seed) + " --out " + samples)
                    .exit_code == 0);
        const int sample_exit = run_cli("check-strong-sep --mode sample --samples " + samples +
                                        " --k 1 --beta " + beta)
                                    .exit_code;
        if (sample_exit == exact_exit) ++matches;
    }
    CHECK(matches >= 45);  // >= 90% of 50 seeds
}

TEST_CASE("cli: flag validation") {
    const std::string prefix = path_of("flagcheck");
    REQUIRE(run_cli("gen --family chain --p 4 --seed 2 --out " + prefix).exit_code == 0);
    CHECK(run_cli("check-degree --mode sample --k 1 --input " + prefix + ".sigma.txt").exit_code ==
          2);
    CHECK(run_cli("check-degree --mode exact --k 1").exit_code == 2);
    CHECK(run_cli("check-strong-sep --mode sample --samples nowhere.txt --k 1").exit_code == 2);
    CHECK(run_cli("check-degree --k 1").exit_code == 2);  // no input at all
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);

    const std::string samples = prefix + ".samples.txt";
    REQUIRE(run_cli("sample --input " + prefix + ".sigma.txt --n 50 --seed 1 --out " + samples)
                .exit_code == 0);
    CHECK(run_cli("check-degree --mode sample --samples " + samples +
                  " --k 1 --alpha 0.1 --beta 0.2")
              .exit_code == 2);
}

TEST_CASE("cli: bench exact mode produces perfect rows") {
    const std::string csv_path = path_of("bench_exact.csv");
    const CliResult result = run_cli(
        "bench --algo strong-sep --family tree --mode exact --k 1 --p-list 5,6 --trials 3 "
        "--seed 4 --out " +
        csv_path);
    CHECK(result.exit_code == 0);
    std::ifstream in(csv_path);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "algorithm,p,k,ell,n,trials,successes,success_rate,mean_queries,wall_ms,alpha,beta");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.find("strong-sep,") == 0);
        // success_rate column (index 7) is 1 in exact mode
        std::stringstream ss(line);
        std::string field;
        for (int i = 0; i <= 7; ++i) std::getline(ss, field, ',');
        CHECK(field == "1");
    }
    CHECK(rows == 2);
}

TEST_CASE("cli: bench survives n = 1") {
    const std::string csv_path = path_of("bench_n1.csv");
    const CliResult result = run_cli(
        "bench --algo degree --family chain --k 1 --p-list 5 --n-list 1 --trials 3 --seed 4 "
        "--out " +
        csv_path);
    CHECK(result.exit_code == 0);
    std::ifstream in(csv_path);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    std::stringstream ss(line);
    std::string field;
    for (int i = 0; i <= 6; ++i) std::getline(ss, field, ',');
    CHECK(field == "0");  // no successes, no crash
}
