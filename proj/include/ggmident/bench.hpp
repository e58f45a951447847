#ifndef GGMIDENT_BENCH_HPP
#define GGMIDENT_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ggmident/synth.hpp"

namespace ggmident {

enum class BenchAlgo { kDegree, kStrongSep, kFvs };

const char* to_string(BenchAlgo algo);
std::optional<BenchAlgo> parse_algo(const std::string& name);

struct BenchConfig {
    BenchAlgo algo = BenchAlgo::kStrongSep;
    GraphFamily family = GraphFamily::kChain;
    int k = 1;
    int ell = 0;                  // kFvs only
    std::vector<int> p_list;
    std::vector<long> n_list;     // ignored in exact mode
    int trials = 50;
    std::uint64_t seed = 1;
    bool exact_mode = false;
    double weight_lo = 0.2;
    double weight_hi = 0.4;
    std::optional<double> alpha_override;  // default: model beta / 2
};

struct BenchRow {
    std::string algorithm;
    int p = 0, k = 0, ell = 0;
    long n = 0;  // 0 in exact mode
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double mean_queries = 0.0;
    double wall_ms = 0.0;
    double alpha = 0.0;  // mean threshold across trials
    double beta = 0.0;   // mean model margin across trials
};

/// One row per (p, n) cell, sorted by (p, n). Completed rows are flushed
/// to `csv` as they finish when it is non-null; `log` receives a verbose
/// line per row (eigenvalue diagnostics included). A trial succeeds only
/// on exact structural agreement with the generating model; oracle errors
/// (singular or undersized conditioning) count as failures.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* csv, std::ostream* log);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRow& row);

}  // namespace ggmident

#endif  // GGMIDENT_BENCH_HPP
