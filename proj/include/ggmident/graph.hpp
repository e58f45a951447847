#ifndef GGMIDENT_GRAPH_HPP
#define GGMIDENT_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "ggmident/index_set.hpp"

namespace ggmident {

/// An edge as an ordered pair (u, v) with u < v, 1-based labels.
using Edge = std::pair<int, int>;

/// Undirected simple graph over nodes 1..p: no self loops, no duplicate
/// edges. Edges are stored normalized (smaller label first) in sorted
/// order, so iteration is deterministic.
class Graph {
public:
    explicit Graph(int node_count);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Idempotent; throws InvalidIndex for labels outside 1..p and
    /// InvalidSpec for self loops.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::set<Edge>& edges() const { return edges_; }

    /// Sorted neighbor labels.
    const std::vector<int>& neighbors(int u) const;
    int degree(int u) const;
    int max_degree() const;

    bool operator==(const Graph& other) const;

private:
    void check_node(int u) const;

    int node_count_;
    std::set<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Partition of `active` into maximal connected node sets of the induced
/// subgraph G_active, listed in increasing order of smallest member.
std::vector<IndexSet> connected_components(const Graph& g, const IndexSet& active);

/// True iff u and v fall in different components once S is removed.
/// Adjacent nodes are never separated. Throws InvalidConditioningSet when
/// an endpoint lies in S or u == v.
bool is_separator(const Graph& g, const IndexSet& s, int u, int v);

/// Like is_separator, but the direct edge (u, v) is ignored if present.
bool separates_excluding_edge(const Graph& g, const IndexSet& s, int u, int v);

/// Max degree at most k.
bool is_degree_bounded(const Graph& g, int k);

/// With delta = 1 if (u,v) is an edge and 0 otherwise: true iff some
/// S subseteq V \ {u,v} with |S| <= k - delta separates u and v once the
/// direct edge is ignored. Smaller sets are accepted (padding with unused
/// nodes preserves separation). Exhaustive subset search, lexicographic by
/// size then within size, early exit on the first witness.
bool is_strongly_k_separable_pair(const Graph& g, int u, int v, int k);

/// Every unordered pair is strongly k-separable.
bool is_strongly_k_separable(const Graph& g, int k);

/// Every non-adjacent pair has a separator of size at most k.
/// Vacuously true for complete graphs.
bool is_k_separable(const Graph& g, int k);

/// The induced subgraph on V \ F is strongly k-separable; separator
/// candidates are drawn from V \ F only.
bool is_generalized_fvs(const Graph& g, const IndexSet& f, int k);

/// Induced subgraph on `keep`, relabeled compactly to 1..|keep| in sorted
/// order of the kept labels.
Graph induced_subgraph(const Graph& g, const IndexSet& keep);

/// Edge set of the induced subgraph on V \ F, in original labels.
std::vector<Edge> edges_outside(const Graph& g, const IndexSet& f);

/// DFS cycle check.
bool is_acyclic(const Graph& g);

}  // namespace ggmident

#endif  // GGMIDENT_GRAPH_HPP
