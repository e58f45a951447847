#ifndef GGMIDENT_SYNTH_HPP
#define GGMIDENT_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ggmident/graph.hpp"
#include "ggmident/sym_matrix.hpp"
#include "ggmident/ci_oracle.hpp"

namespace ggmident {

enum class GraphFamily {
    kTree,           // random tree (uniform attachment)
    kChain,          // path 1-2-...-p
    kCycle,          // single p-cycle
    kStar,           // node 1 adjacent to all others
    kDegreeBounded,  // random graph with max degree <= k
    kExample1,       // edge (1,2) plus (u,1),(u,2) for u >= 3
    kExample2,       // path on 1..p-2 plus two hubs over all path nodes
    kBasePlusFvs,    // strongly-k-separable base plus ell planted hubs
};

const char* to_string(GraphFamily family);
std::optional<GraphFamily> parse_family(const std::string& name);

struct ModelSpec {
    int p = 0;
    GraphFamily family = GraphFamily::kTree;
    int k = 0;    // degree bound for kDegreeBounded / kBasePlusFvs
    int ell = 0;  // hub count for kBasePlusFvs
    double weight_lo = 0.2;
    double weight_hi = 0.4;
    std::uint64_t seed = 0;
};

/// Ground truth for tests and benchmarks: a graph, a precision matrix
/// whose off-diagonal support equals the edge set exactly, its inverse,
/// and the dependence margin beta = min |Sigma(u,v|S)| over edge queries
/// (u,v) in E with |S| <= beta_cap. The margin over edges is the quantity
/// the threshold calibration alpha = beta/2 needs: non-edge dependencies
/// decay with path length and are filtered by the faithfulness check
/// instead.
struct GroundTruthModel {
    Graph graph;
    SymMatrix omega;
    SymMatrix sigma;
    double beta = 0.0;
    int beta_cap = 0;
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double epsilon_zero = 0.0;  // default zero threshold for sigma
    std::uint64_t seed = 0;
    int regenerations = 0;  // weight redraws forced by the beta floor
};

/// Deterministic graph for (family, p, k, ell, seed).
/// Throws InvalidSpec for inconsistent parameters.
Graph generate_graph(const ModelSpec& spec);

/// Hub nodes planted by the family, when it has any (example1: {1,2};
/// example2 and base_plus_fvs: the trailing hub labels).
std::optional<IndexSet> planted_hubs(const ModelSpec& spec);

/// Weights each edge with random sign and magnitude uniform in
/// [weight_lo, weight_hi]; diagonal entries are 1 + sum of incident
/// magnitudes, so the precision matrix is strictly diagonally dominant.
/// beta is scanned over all edges and conditioning sets up to beta_cap.
GroundTruthModel precision_from_graph(const Graph& g, double weight_lo, double weight_hi,
                                      std::uint64_t seed, int beta_cap);

/// precision_from_graph plus the margin guard: models whose beta is not
/// above 10x the zero threshold are rebuilt with a stepped weight seed,
/// counting the retries.
GroundTruthModel make_model_for_graph(const Graph& g, double weight_lo, double weight_hi,
                                      std::uint64_t seed, int beta_cap);

/// make_model_for_graph over the family-generated graph.
GroundTruthModel make_model(const ModelSpec& spec, int beta_cap);

/// n i.i.d. zero-mean rows with the given covariance, generated through
/// its Cholesky factor from the portable Rng stream. Bit-identical for
/// equal seeds. Throws NotPositiveDefinite when the factorization fails.
Eigen::MatrixXd gaussian_rows(const SymMatrix& sigma, long n, std::uint64_t seed);

/// The raw n x p sample rows for a ground-truth model.
Eigen::MatrixXd sample_rows(const GroundTruthModel& model, long n, std::uint64_t seed);

/// Scatter matrix of sample_rows(model, n, seed): the sum of outer
/// products of the draws.
ScatterData sample_gaussian(const GroundTruthModel& model, long n, std::uint64_t seed);

}  // namespace ggmident

#endif  // GGMIDENT_SYNTH_HPP
