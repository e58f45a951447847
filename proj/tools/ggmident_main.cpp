// Command-line surface for the identification toolkit: structure checks
// driven by a covariance matrix or samples, synthetic model generation,
// Gaussian sampling, and the sample-complexity benchmark harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggmident/bench.hpp"
#include "ggmident/ci_oracle.hpp"
#include "ggmident/errors.hpp"
#include "ggmident/identify.hpp"
#include "ggmident/io.hpp"
#include "ggmident/linalg.hpp"
#include "ggmident/report_json.hpp"
#include "ggmident/rng.hpp"
#include "ggmident/synth.hpp"

namespace {

using nlohmann::json;
using namespace ggmident;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CheckArgs {
    std::string mode = "exact";
    int k = 1;
    int ell = 0;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> epsilon_zero;
    std::string input;
    std::string samples;
    std::string scatter;
    long scatter_n = 0;
    bool center = false;
    std::string out;
    bool parallel = false;
};

void add_check_options(CLI::App* cmd, CheckArgs& args, bool with_ell) {
    cmd->add_option("--mode", args.mode, "exact | sample")
        ->check(CLI::IsMember({"exact", "sample"}))
        ->capture_default_str();
    cmd->add_option("--k", args.k, "sparsity order")->required();
    if (with_ell) cmd->add_option("--ell", args.ell, "removal-set size")->required();
    cmd->add_option("--alpha", args.alpha, "sample-mode independence threshold");
    cmd->add_option("--beta", args.beta, "dependence margin; sets alpha = beta/2");
    cmd->add_option("--epsilon-zero", args.epsilon_zero, "exact-mode zero threshold");
    cmd->add_option("--input", args.input, "covariance matrix file (exact mode)");
    cmd->add_option("--samples", args.samples, "samples file (sample mode)");
    cmd->add_option("--scatter", args.scatter, "scatter matrix file (sample mode, with --n)");
    cmd->add_option("--n", args.scatter_n, "sample count behind --scatter");
    cmd->add_flag("--center", args.center, "subtract column means before forming the scatter");
    cmd->add_option("--out", args.out, "report path (default: stdout)");
    cmd->add_flag("--parallel", args.parallel, "classify pairs on multiple threads");
}

struct OracleSetup {
    std::shared_ptr<CiOracle> oracle;
    json config;
    json notes;
};

OracleSetup build_oracle(const CheckArgs& args) {
    OracleSetup setup;
    setup.config = {{"mode", args.mode}, {"k", args.k}, {"ell", args.ell},
                    {"center", args.center}};
    if (args.alpha && args.beta)
        throw InvalidSpec("supply at most one of --alpha and --beta");

    if (args.mode == "exact") {
        if (args.input.empty()) throw InvalidSpec("exact mode requires --input");
        const SymMatrix sigma = read_matrix_file(args.input);
        const double eps = args.epsilon_zero.value_or(default_epsilon_zero(sigma));
        setup.oracle = cached(make_exact_oracle(sigma, eps));
        setup.config["input"] = args.input;
        setup.config["epsilon_zero"] = eps;
        return setup;
    }

    ScatterData data{SymMatrix(1), 0};
    if (!args.samples.empty()) {
        const SampleMatrix samples = read_samples_file(args.samples);
        data = scatter_from_samples(samples, args.center);
        setup.config["samples"] = args.samples;
    } else if (!args.scatter.empty()) {
        if (args.scatter_n < 1) throw InvalidSpec("--scatter requires --n >= 1");
        data = {read_matrix_file(args.scatter), args.scatter_n};
        setup.config["scatter"] = args.scatter;
    } else {
        throw InvalidSpec("sample mode requires --samples or --scatter with --n");
    }
    setup.config["n"] = data.n;

    double alpha = 0.0;
    std::string alpha_source;
    if (args.alpha) {
        alpha = *args.alpha;
        alpha_source = "explicit";
    } else if (args.beta) {
        alpha = *args.beta / 2.0;
        alpha_source = "beta_halved";
    } else {
        alpha = default_alpha(data.s_mat.dim(), data.n, args.k + args.ell, 0.05, 1.0);
        alpha_source = "default_heuristic";
    }
    setup.config["alpha"] = alpha;
    setup.notes["alpha_source"] = alpha_source;
    setup.notes["sample_mode_caveat"] =
        "classifications are threshold decisions on sample statistics; "
        "no structural guarantee is implied";
    setup.oracle = cached(make_empirical_oracle(std::move(data), alpha));
    return setup;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << report.dump(2) << "\n";
}

int run_check(const CheckArgs& args, const std::string& command) {
    OracleSetup setup = build_oracle(args);
    setup.config["p"] = setup.oracle->dim();
    IdentifyOptions options{args.parallel, false};
    IdentificationReport report;
    if (command == "check-degree") {
        report = identify_degree_bounded(*setup.oracle, args.k, options);
    } else {
        report = identify_strongly_separable(*setup.oracle, args.k, options);
    }
    emit(report_to_json(report, command, setup.config, setup.notes), args.out);
    return report.verdict ? kExitTrue : kExitFalse;
}

int run_find_fvs(const CheckArgs& args) {
    OracleSetup setup = build_oracle(args);
    const int p = setup.oracle->dim();
    setup.config["p"] = p;
    if (args.ell >= p - 1)
        throw InvalidSpec("--ell must leave at least two nodes (ell <= p-2, p = " +
                          std::to_string(p) + ")");
    IdentifyOptions options{args.parallel, false};
    const FvsReport report = identify_generalized_fvs(*setup.oracle, args.k, args.ell, options);
    emit(report_to_json(report, setup.config, setup.notes), args.out);
    return report.qualifying.empty() ? kExitFalse : kExitTrue;
}

struct GenArgs {
    std::string family = "tree";
    int p = 8;
    int k = 0;
    int ell = 0;
    std::uint64_t seed = 1;
    double weight_lo = 0.2;
    double weight_hi = 0.4;
    int beta_cap = 2;
    std::string out_prefix;
};

int run_gen(const GenArgs& args) {
    const auto family = parse_family(args.family);
    if (!family) throw InvalidSpec("unknown family '" + args.family + "'");
    ModelSpec spec{args.p, *family, args.k, args.ell, args.weight_lo, args.weight_hi, args.seed};
    const GroundTruthModel model = make_model(spec, args.beta_cap);

    write_edge_list(args.out_prefix + ".edges.txt", model.graph);
    write_matrix_file(args.out_prefix + ".sigma.txt", model.sigma);
    write_matrix_file(args.out_prefix + ".omega.txt", model.omega);

    json meta{{"family", to_string(*family)},
              {"p", args.p},
              {"k", args.k},
              {"ell", args.ell},
              {"seed", args.seed},
              {"weight_lo", args.weight_lo},
              {"weight_hi", args.weight_hi},
              {"edge_count", model.graph.edge_count()},
              {"beta", model.beta},
              {"beta_cap", model.beta_cap},
              {"lambda_max", model.lambda_max},
              {"lambda_min", model.lambda_min},
              {"epsilon_zero", model.epsilon_zero},
              {"regenerations", model.regenerations},
              {"rng", Rng::kIdentity}};
    if (const auto hubs = planted_hubs(spec)) meta["hubs"] = hubs->members();
    std::ofstream out(args.out_prefix + ".meta.json");
    if (!out) throw ParseError("cannot write " + args.out_prefix + ".meta.json");
    out << meta.dump(2) << "\n";
    return kExitTrue;
}

struct SampleArgs {
    std::string input;
    long n = 0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_sample(const SampleArgs& args) {
    const SymMatrix sigma = read_matrix_file(args.input);
    const Eigen::MatrixXd rows = gaussian_rows(sigma, args.n, args.seed);
    write_samples_file(args.out, rows);
    return kExitTrue;
}

struct BenchArgs {
    std::string algo = "strong-sep";
    std::string family = "chain";
    std::string mode = "sample";
    int k = 1;
    int ell = 0;
    std::vector<int> p_list;
    std::vector<long> n_list;
    int trials = 50;
    std::uint64_t seed = 1;
    double weight_lo = 0.2;
    double weight_hi = 0.4;
    std::optional<double> alpha;
    std::string out;
};

int run_bench_cmd(const BenchArgs& args) {
    BenchConfig config;
    const auto algo = parse_algo(args.algo);
    if (!algo) throw InvalidSpec("unknown algorithm '" + args.algo + "'");
    const auto family = parse_family(args.family);
    if (!family) throw InvalidSpec("unknown family '" + args.family + "'");
    config.algo = *algo;
    config.family = *family;
    config.k = args.k;
    config.ell = args.ell;
    config.p_list = args.p_list;
    config.n_list = args.n_list;
    config.trials = args.trials;
    config.seed = args.seed;
    config.exact_mode = args.mode == "exact";
    config.weight_lo = args.weight_lo;
    config.weight_hi = args.weight_hi;
    config.alpha_override = args.alpha;

    if (args.out.empty()) {
        run_bench(config, &std::cout, &std::cerr);
        return kExitTrue;
    }
    std::ofstream out(args.out);
    if (!out) throw ParseError("cannot write " + args.out);
    run_bench(config, &out, &std::cerr);
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian graphical model structure checks: degree bounds, strong "
                 "separability, and generalized feedback vertex sets"};
    app.require_subcommand(1);

    CheckArgs degree_args;
    auto* degree_cmd = app.add_subcommand("check-degree", "is the precision graph k-degree bounded?");
    add_check_options(degree_cmd, degree_args, /*with_ell=*/false);

    CheckArgs sep_args;
    auto* sep_cmd = app.add_subcommand("check-strong-sep", "is the precision graph strongly k-separable?");
    add_check_options(sep_cmd, sep_args, /*with_ell=*/false);

    CheckArgs fvs_args;
    auto* fvs_cmd = app.add_subcommand("find-fvs", "find size-ell sets whose removal leaves a strongly k-separable graph");
    add_check_options(fvs_cmd, fvs_args, /*with_ell=*/true);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a ground-truth model bundle");
    gen_cmd->add_option("--family", gen_args.family,
                        "tree | chain | cycle | star | degree-bounded | example1 | example2 | base-plus-fvs")
        ->capture_default_str();
    gen_cmd->add_option("--p", gen_args.p, "node count")->required();
    gen_cmd->add_option("--k", gen_args.k, "degree bound (degree-bounded / base-plus-fvs)");
    gen_cmd->add_option("--ell", gen_args.ell, "hub count (base-plus-fvs)");
    gen_cmd->add_option("--seed", gen_args.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--weight-lo", gen_args.weight_lo, "minimum |edge weight|")->capture_default_str();
    gen_cmd->add_option("--weight-hi", gen_args.weight_hi, "maximum |edge weight|")->capture_default_str();
    gen_cmd->add_option("--beta-cap", gen_args.beta_cap, "conditioning-size cap for the margin scan")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen_args.out_prefix, "output path prefix")->required();

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand("sample", "draw Gaussian samples from a covariance file");
    sample_cmd->add_option("--input", sample_args.input, "covariance matrix file")->required();
    sample_cmd->add_option("--n", sample_args.n, "number of samples")->required();
    sample_cmd->add_option("--seed", sample_args.seed, "generator seed")->capture_default_str();
    sample_cmd->add_option("--out", sample_args.out, "samples file to write")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "success-rate sweep against generated models");
    bench_cmd->add_option("--algo", bench_args.algo, "degree | strong-sep | fvs")->capture_default_str();
    bench_cmd->add_option("--family", bench_args.family, "model family")->capture_default_str();
    bench_cmd->add_option("--mode", bench_args.mode, "exact | sample")
        ->check(CLI::IsMember({"exact", "sample"}))
        ->capture_default_str();
    bench_cmd->add_option("--k", bench_args.k, "sparsity order")->required();
    bench_cmd->add_option("--ell", bench_args.ell, "removal-set size (fvs)");
    bench_cmd->add_option("--p-list", bench_args.p_list, "node counts")->delimiter(',')->required();
    bench_cmd->add_option("--n-list", bench_args.n_list, "sample sizes")->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials, "trials per cell")->capture_default_str();
    bench_cmd->add_option("--seed", bench_args.seed, "sweep seed")->capture_default_str();
    bench_cmd->add_option("--weight-lo", bench_args.weight_lo, "minimum |edge weight|")->capture_default_str();
    bench_cmd->add_option("--weight-hi", bench_args.weight_hi, "maximum |edge weight|")->capture_default_str();
    bench_cmd->add_option("--alpha", bench_args.alpha, "threshold override (default: model beta / 2)");
    bench_cmd->add_option("--out", bench_args.out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (degree_cmd->parsed()) return run_check(degree_args, "check-degree");
        if (sep_cmd->parsed()) return run_check(sep_args, "check-strong-sep");
        if (fvs_cmd->parsed()) return run_find_fvs(fvs_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (sample_cmd->parsed()) return run_sample(sample_args);
        if (bench_cmd->parsed()) return run_bench_cmd(bench_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
