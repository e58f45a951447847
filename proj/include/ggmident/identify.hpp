#ifndef GGMIDENT_IDENTIFY_HPP
#define GGMIDENT_IDENTIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ggmident/ci_oracle.hpp"
#include "ggmident/graph.hpp"
#include "ggmident/index_set.hpp"

namespace ggmident {

/// Graph of pairwise conditional dependencies given a fixed conditioning
/// set: nodes are V \ (conditioning + exclude), and (i, j) is an edge iff
/// the oracle reports X_i and X_j dependent given X_conditioning.
struct DependenceGraph {
    IndexSet active;
    IndexSet conditioning;
    std::vector<Edge> edges;  // normalized (i < j), both endpoints active

    /// Connected components in increasing order of smallest member.
    std::vector<IndexSet> components() const;

    /// Component containing h (h must be active).
    IndexSet component_of(int h) const;
};

enum class PairStatus { kNonNeighbor, kNeighbor, kUnresolved };

const char* to_string(PairStatus status);

/// Outcome for one node pair in the pair-classification loop, with the
/// conditioning set that certified it when one exists.
struct PairClassification {
    int u = 0, v = 0;  // u > v
    PairStatus status = PairStatus::kUnresolved;
    std::optional<IndexSet> witness;
};

struct OracleStats {
    std::uint64_t queries = 0;
    double wall_ms = 0.0;
};

struct IdentificationReport {
    bool verdict = false;
    int k = 0;
    std::optional<int> ell;
    /// Meaningful only when verdict is true.
    std::vector<Edge> recovered_edges;
    /// Degree check only: node -> recovered neighbor set.
    std::map<int, IndexSet> neighborhoods;
    /// Degree check only: nodes with no screening set (empty on success).
    std::vector<int> unscreened_nodes;
    /// Separability check only; on a false verdict every unresolved pair
    /// is listed.
    std::vector<PairClassification> classifications;
    OracleStats stats;
};

struct FvsCandidate {
    IndexSet fvs;
    std::vector<Edge> residual_edges;
};

struct FvsReport {
    int k = 0;
    int ell = 0;
    std::vector<FvsCandidate> qualifying;
    OracleStats stats;
};

struct IdentifyOptions {
    /// Classify pairs on multiple threads. Results are identical to the
    /// sequential path; requires the oracle's concurrent-query contract.
    bool parallel = false;
    /// Reverse the within-size order of subset enumeration. Verdicts and
    /// edge sets are invariant to this; only stored witnesses may differ.
    bool reverse_within_size = false;
};

DependenceGraph dependence_graph(const CiOracle& oracle, const IndexSet& conditioning,
                                 const IndexSet& exclude = {});

/// An independence X_u ind X_v | X_S is faithful iff u and v fall in
/// different components of the dependence graph given S. Callers check
/// the independence itself first.
bool is_faithful(const CiOracle& oracle, int u, int v, const IndexSet& s);

/// All S subseteq V \ {u} with |S| <= k that screen u off from every other
/// node: the oracle reports u independent of each w outside S + {u} given
/// S. Lexicographic by size then within size.
std::vector<IndexSet> screening_witnesses(const CiOracle& oracle, int u, int k);

/// All S subseteq V \ {u,v} with |S| <= k whose independence of (u, v) is
/// faithful: certificates that u and v are non-adjacent.
std::vector<IndexSet> nonadjacency_witnesses(const CiOracle& oracle, int u, int v, int k);

/// All S subseteq V \ {u,v} with |S| <= k-1 that separate u from v once
/// the direct edge is discounted, established from conditional
/// independencies alone. S qualifies when, writing D_x for the dependence
/// graph given S + {x}, either
///   (a) v is isolated in D_u, or
///   (b) u is isolated in D_v, or
///   (c) each of D_v and D_u has an active node outside the endpoint's
///       component, and the component of u in D_v is disjoint from the
///       component of v in D_u (endpoints excluded).
/// Certificates that u and v are adjacent but separable otherwise.
std::vector<IndexSet> adjacency_witnesses(const CiOracle& oracle, int u, int v, int k);

/// Degree check: the graph has max degree <= k iff every node has a
/// screening set. On success the recovered neighborhood of u is the
/// intersection of all its screening witnesses and the edge set follows.
IdentificationReport identify_degree_bounded(const CiOracle& oracle, int k,
                                             const IdentifyOptions& options = {});

/// Strong-separability check: classifies every pair, non-adjacency
/// witnesses first, then adjacency witnesses. Verdict is true iff no pair
/// is left unresolved; the recovered edges are the neighbor pairs.
IdentificationReport identify_strongly_separable(const CiOracle& oracle, int k,
                                                 const IdentifyOptions& options = {});

/// Candidate-removal check: for every F of size ell (lexicographic), runs
/// the pair loop over pairs outside F with F added to every conditioning
/// set (size bounds apply to the part beyond F). F qualifies when every
/// pair classifies; the residual edges are the neighbor pairs.
FvsReport identify_generalized_fvs(const CiOracle& oracle, int k, int ell,
                                   const IdentifyOptions& options = {});

}  // namespace ggmident

#endif  // GGMIDENT_IDENTIFY_HPP
