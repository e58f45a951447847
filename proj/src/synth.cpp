#include "ggmident/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>

#include "ggmident/errors.hpp"
#include "ggmident/linalg.hpp"
#include "ggmident/rng.hpp"

namespace ggmident {

namespace {

void check_spec(const ModelSpec& spec) {
    if (spec.p < 2) throw InvalidSpec("model needs p >= 2, got " + std::to_string(spec.p));
    if (!(0.0 < spec.weight_lo && spec.weight_lo <= spec.weight_hi && spec.weight_hi < 1.0))
        throw InvalidSpec("weight range must satisfy 0 < lo <= hi < 1");
    switch (spec.family) {
        case GraphFamily::kCycle:
            if (spec.p < 3) throw InvalidSpec("cycle needs p >= 3");
            break;
        case GraphFamily::kDegreeBounded:
            if (spec.k < 1) throw InvalidSpec("degree-bounded family needs k >= 1");
            break;
        case GraphFamily::kExample1:
            if (spec.p < 3) throw InvalidSpec("example1 needs p >= 3");
            break;
        case GraphFamily::kExample2:
            if (spec.p < 4) throw InvalidSpec("example2 needs p >= 4");
            break;
        case GraphFamily::kBasePlusFvs:
            if (spec.k < 1 || spec.ell < 1) throw InvalidSpec("base-plus-fvs needs k >= 1, ell >= 1");
            if (spec.p - spec.ell < 2) throw InvalidSpec("base-plus-fvs needs p - ell >= 2");
            break;
        default:
            break;
    }
}

void add_random_tree(Graph& g, int node_count, Rng& rng) {
    for (int u = 2; u <= node_count; ++u) g.add_edge(u, rng.uniform_int(1, u - 1));
}

/// Subsets of pool with size 0..max_size, lexicographic by size then
/// within size.
template <typename Fn>
void for_subsets_upto(const std::vector<int>& pool, int max_size, Fn&& fn) {
    const int n = static_cast<int>(pool.size());
    max_size = std::min(max_size, n);
    for (int size = 0; size <= max_size; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> subset(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
                subset[static_cast<std::size_t>(i)] =
                    pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            fn(IndexSet(std::move(subset)));
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

void random_degree_bounded(Graph& g, int node_count, int k, Rng& rng) {
    std::vector<Edge> candidates;
    for (int u = 1; u <= node_count; ++u)
        for (int v = u + 1; v <= node_count; ++v) candidates.push_back({u, v});
    // Fisher-Yates on the portable stream.
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
        std::swap(candidates[static_cast<std::size_t>(i)],
                  candidates[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    for (const Edge& e : candidates) {
        if (g.degree(e.first) >= k || g.degree(e.second) >= k) continue;
        if (rng.uniform01() < 0.75) g.add_edge(e.first, e.second);
    }
}

}  // namespace

const char* to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::kTree: return "tree";
        case GraphFamily::kChain: return "chain";
        case GraphFamily::kCycle: return "cycle";
        case GraphFamily::kStar: return "star";
        case GraphFamily::kDegreeBounded: return "degree-bounded";
        case GraphFamily::kExample1: return "example1";
        case GraphFamily::kExample2: return "example2";
        case GraphFamily::kBasePlusFvs: return "base-plus-fvs";
    }
    return "tree";
}

std::optional<GraphFamily> parse_family(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "tree") return GraphFamily::kTree;
    if (n == "chain" || n == "path") return GraphFamily::kChain;
    if (n == "cycle" || n == "ring") return GraphFamily::kCycle;
    if (n == "star") return GraphFamily::kStar;
    if (n == "degree-bounded") return GraphFamily::kDegreeBounded;
    if (n == "example1") return GraphFamily::kExample1;
    if (n == "example2") return GraphFamily::kExample2;
    if (n == "base-plus-fvs") return GraphFamily::kBasePlusFvs;
    return std::nullopt;
}

Graph generate_graph(const ModelSpec& spec) {
    check_spec(spec);
    const int p = spec.p;
    Rng rng(spec.seed);
    Graph g(p);
    switch (spec.family) {
        case GraphFamily::kTree:
            add_random_tree(g, p, rng);
            break;
        case GraphFamily::kChain:
            for (int u = 1; u < p; ++u) g.add_edge(u, u + 1);
            break;
        case GraphFamily::kCycle:
            for (int u = 1; u < p; ++u) g.add_edge(u, u + 1);
            g.add_edge(1, p);
            break;
        case GraphFamily::kStar:
            for (int u = 2; u <= p; ++u) g.add_edge(1, u);
            break;
        case GraphFamily::kDegreeBounded:
            random_degree_bounded(g, p, spec.k, rng);
            break;
        case GraphFamily::kExample1:
            g.add_edge(1, 2);
            for (int u = 3; u <= p; ++u) {
                g.add_edge(u, 1);
                g.add_edge(u, 2);
            }
            break;
        case GraphFamily::kExample2:
            for (int u = 1; u < p - 2; ++u) g.add_edge(u, u + 1);
            for (int u = 1; u <= p - 2; ++u) {
                g.add_edge(u, p - 1);
                g.add_edge(u, p);
            }
            break;
        case GraphFamily::kBasePlusFvs: {
            const int base_p = p - spec.ell;
            if (spec.k == 1) {
                add_random_tree(g, base_p, rng);
            } else {
                random_degree_bounded(g, base_p, spec.k, rng);
            }
            std::vector<int> base_nodes(static_cast<std::size_t>(base_p));
            for (int x = 1; x <= base_p; ++x) base_nodes[static_cast<std::size_t>(x - 1)] = x;
            for (int hub = base_p + 1; hub <= p; ++hub) {
                const int want = std::min(base_p, 3 + rng.uniform_int(0, 2));
                // partial shuffle picks `want` distinct base nodes
                for (int i = 0; i < want; ++i) {
                    const int j = rng.uniform_int(i, base_p - 1);
                    std::swap(base_nodes[static_cast<std::size_t>(i)],
                              base_nodes[static_cast<std::size_t>(j)]);
                    g.add_edge(hub, base_nodes[static_cast<std::size_t>(i)]);
                }
            }
            break;
        }
    }
    return g;
}

std::optional<IndexSet> planted_hubs(const ModelSpec& spec) {
    switch (spec.family) {
        case GraphFamily::kExample1:
            return IndexSet{1, 2};
        case GraphFamily::kExample2:
            return IndexSet{spec.p - 1, spec.p};
        case GraphFamily::kBasePlusFvs: {
            std::vector<int> hubs;
            for (int x = spec.p - spec.ell + 1; x <= spec.p; ++x) hubs.push_back(x);
            return IndexSet(hubs);
        }
        default:
            return std::nullopt;
    }
}

GroundTruthModel precision_from_graph(const Graph& g, double weight_lo, double weight_hi,
                                      std::uint64_t seed, int beta_cap) {
    if (!(0.0 < weight_lo && weight_lo <= weight_hi && weight_hi < 1.0))
        throw InvalidSpec("weight range must satisfy 0 < lo <= hi < 1");
    const int p = g.node_count();
    beta_cap = std::max(0, std::min(beta_cap, p - 2));

    Rng rng(seed);
    SymMatrix omega(p);
    for (const Edge& e : g.edges()) {
        const double magnitude = rng.uniform(weight_lo, weight_hi);
        const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
        omega.set(e.first, e.second, sign * magnitude);
    }
    for (int u = 1; u <= p; ++u) {
        double row_sum = 0.0;
        for (int v : g.neighbors(u)) row_sum += std::abs(omega(u, v));
        omega.set(u, u, 1.0 + row_sum);
    }

    GroundTruthModel model{g, omega, invert_pd(omega), 0.0, beta_cap, 0.0, 0.0, 0.0, seed, 0};
    std::tie(model.lambda_max, model.lambda_min) = eigenvalue_range(model.sigma);
    model.epsilon_zero = default_epsilon_zero(model.sigma);

    // Dependence margin over edge queries: edges are never separated, so
    // every conditional covariance scanned here should stay well above the
    // zero threshold in a usable model.
    double beta = std::numeric_limits<double>::infinity();
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(p));
    for (const Edge& e : g.edges()) {
        pool.clear();
        for (int x = 1; x <= p; ++x)
            if (x != e.first && x != e.second) pool.push_back(x);
        for_subsets_upto(pool, beta_cap, [&](const IndexSet& s) {
            beta = std::min(beta, std::abs(cond_cov(model.sigma, e.first, e.second, s)));
        });
    }
    // Edgeless models have no dependent queries; any threshold works.
    model.beta = g.edge_count() == 0 ? 1.0 : beta;
    return model;
}

GroundTruthModel make_model_for_graph(const Graph& g, double weight_lo, double weight_hi,
                                      std::uint64_t seed, int beta_cap) {
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::uint64_t weight_seed =
            seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1));
        GroundTruthModel model =
            precision_from_graph(g, weight_lo, weight_hi, weight_seed, beta_cap);
        model.regenerations = attempt;
        if (model.beta > 10.0 * model.epsilon_zero) return model;
    }
    throw InvalidSpec("could not reach a usable dependence margin in " +
                      std::to_string(kMaxAttempts) + " weight draws");
}

GroundTruthModel make_model(const ModelSpec& spec, int beta_cap) {
    return make_model_for_graph(generate_graph(spec), spec.weight_lo, spec.weight_hi, spec.seed,
                                beta_cap);
}

Eigen::MatrixXd gaussian_rows(const SymMatrix& sigma, long n, std::uint64_t seed) {
    if (n < 1) throw InvalidSpec("sample count must be at least 1");
    const int p = sigma.dim();
    Eigen::LLT<Eigen::MatrixXd> llt(sigma.dense());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("covariance is not positive definite");
    const Eigen::MatrixXd chol_lower = llt.matrixL();

    Rng rng(seed);
    Eigen::MatrixXd rows(n, p);
    Eigen::VectorXd z(p);
    for (long i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) z(j) = rng.normal();
        rows.row(i) = (chol_lower * z).transpose();
    }
    return rows;
}

Eigen::MatrixXd sample_rows(const GroundTruthModel& model, long n, std::uint64_t seed) {
    return gaussian_rows(model.sigma, n, seed);
}

ScatterData sample_gaussian(const GroundTruthModel& model, long n, std::uint64_t seed) {
    const Eigen::MatrixXd rows = sample_rows(model, n, seed);
    return {SymMatrix::from_dense(rows.transpose() * rows), n};
}

}  // namespace ggmident
