#include "ggmident/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <set>

#include "ggmident/errors.hpp"
#include "ggmident/identify.hpp"

namespace ggmident {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, int p, int trial) {
    return mix64(base ^ mix64(static_cast<std::uint64_t>(p) << 32 |
                              static_cast<std::uint64_t>(trial)));
}

/// All size-ell subsets qualifying as removal sets under the brute-force
/// certifier, paired with their residual edge sets.
std::vector<FvsCandidate> brute_force_fvs(const Graph& g, int k, int ell) {
    std::vector<FvsCandidate> out;
    const int p = g.node_count();
    std::vector<int> pick(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        IndexSet f(pick);
        if (is_generalized_fvs(g, f, k)) out.push_back({f, edges_outside(g, f)});
        if (ell == 0) break;
        int i = ell - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == p - ell + i + 1) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ell; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool edges_match(const std::vector<Edge>& recovered, const std::set<Edge>& truth) {
    return recovered.size() == truth.size() &&
           std::equal(recovered.begin(), recovered.end(), truth.begin());
}

bool run_trial(const BenchConfig& config, const GroundTruthModel& model,
               const CiOracle& oracle, std::uint64_t* queries) {
    switch (config.algo) {
        case BenchAlgo::kDegree: {
            const auto report = identify_degree_bounded(oracle, config.k);
            *queries = report.stats.queries;
            const bool truth = is_degree_bounded(model.graph, config.k);
            if (report.verdict != truth) return false;
            return !truth || edges_match(report.recovered_edges, model.graph.edges());
        }
        case BenchAlgo::kStrongSep: {
            const auto report = identify_strongly_separable(oracle, config.k);
            *queries = report.stats.queries;
            const bool truth = is_strongly_k_separable(model.graph, config.k);
            if (report.verdict != truth) return false;
            return !truth || edges_match(report.recovered_edges, model.graph.edges());
        }
        case BenchAlgo::kFvs: {
            const auto report = identify_generalized_fvs(oracle, config.k, config.ell);
            *queries = report.stats.queries;
            const auto truth = brute_force_fvs(model.graph, config.k, config.ell);
            if (report.qualifying.size() != truth.size()) return false;
            for (std::size_t i = 0; i < truth.size(); ++i) {
                if (report.qualifying[i].fvs != truth[i].fvs) return false;
                if (report.qualifying[i].residual_edges != truth[i].residual_edges) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

const char* to_string(BenchAlgo algo) {
    switch (algo) {
        case BenchAlgo::kDegree: return "degree";
        case BenchAlgo::kStrongSep: return "strong-sep";
        case BenchAlgo::kFvs: return "fvs";
    }
    return "strong-sep";
}

std::optional<BenchAlgo> parse_algo(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "degree" || n == "check-degree") return BenchAlgo::kDegree;
    if (n == "strong-sep" || n == "check-strong-sep") return BenchAlgo::kStrongSep;
    if (n == "fvs" || n == "find-fvs") return BenchAlgo::kFvs;
    return std::nullopt;
}

void write_csv_header(std::ostream& out) {
    out << "algorithm,p,k,ell,n,trials,successes,success_rate,mean_queries,wall_ms,alpha,beta\n";
}

void write_csv_row(std::ostream& out, const BenchRow& row) {
    out << row.algorithm << ',' << row.p << ',' << row.k << ',' << row.ell << ',' << row.n << ','
        << row.trials << ',' << row.successes << ',' << row.success_rate << ','
        << row.mean_queries << ',' << row.wall_ms << ',' << row.alpha << ',' << row.beta << '\n';
    out.flush();
}

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* csv, std::ostream* log) {
    if (config.p_list.empty()) throw InvalidSpec("bench needs at least one p");
    if (!config.exact_mode && config.n_list.empty())
        throw InvalidSpec("sample-mode bench needs at least one n");
    if (config.trials < 1) throw InvalidSpec("bench needs at least one trial");

    std::vector<int> p_values = config.p_list;
    std::sort(p_values.begin(), p_values.end());
    std::vector<long> n_values = config.exact_mode ? std::vector<long>{0} : config.n_list;
    std::sort(n_values.begin(), n_values.end());

    const int beta_cap = config.k + config.ell;
    std::vector<BenchRow> rows;
    if (csv) write_csv_header(*csv);

    for (int p : p_values) {
        for (long n : n_values) {
            const auto row_start = std::chrono::steady_clock::now();
            BenchRow row;
            row.algorithm = to_string(config.algo);
            row.p = p;
            row.k = config.k;
            row.ell = config.ell;
            row.n = n;
            row.trials = config.trials;

            double alpha_sum = 0.0, beta_sum = 0.0, query_sum = 0.0;
            double lambda_max_sum = 0.0, lambda_min_sum = 0.0;
            for (int trial = 0; trial < config.trials; ++trial) {
                const std::uint64_t model_seed = trial_seed(config.seed, p, trial);
                ModelSpec spec{p, config.family, config.k, config.ell,
                               config.weight_lo, config.weight_hi, model_seed};
                const GroundTruthModel model = make_model(spec, beta_cap);
                beta_sum += model.beta;
                lambda_max_sum += model.lambda_max;
                lambda_min_sum += model.lambda_min;

                std::shared_ptr<CiOracle> oracle;
                double alpha = 0.0;
                bool success = false;
                std::uint64_t queries = 0;
                try {
                    if (config.exact_mode) {
                        alpha = model.epsilon_zero;
                        oracle = cached(make_exact_oracle(model.sigma, model.epsilon_zero));
                    } else {
                        alpha = config.alpha_override ? *config.alpha_override : model.beta / 2.0;
                        const ScatterData scatter =
                            sample_gaussian(model, n, mix64(model_seed ^ static_cast<std::uint64_t>(n)));
                        oracle = cached(make_empirical_oracle(scatter, alpha));
                    }
                    success = run_trial(config, model, *oracle, &queries);
                } catch (const Error&) {
                    // Singular or undersized conditioning counts as a failed
                    // trial, not a harness crash.
                    success = false;
                }
                alpha_sum += alpha;
                query_sum += static_cast<double>(queries);
                if (success) ++row.successes;
            }

            row.success_rate = static_cast<double>(row.successes) / config.trials;
            row.mean_queries = query_sum / config.trials;
            row.alpha = alpha_sum / config.trials;
            row.beta = beta_sum / config.trials;
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - row_start)
                              .count();
            if (csv) write_csv_row(*csv, row);
            if (log) {
                *log << "# " << row.algorithm << " family=" << to_string(config.family)
                     << " p=" << p << " k=" << config.k << " ell=" << config.ell << " n=" << n
                     << " successes=" << row.successes << "/" << config.trials
                     << " mean_queries=" << row.mean_queries
                     << " mean_lambda_max=" << lambda_max_sum / config.trials
                     << " mean_lambda_min=" << lambda_min_sum / config.trials << "\n";
                log->flush();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace ggmident
