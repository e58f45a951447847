#include "ggmident/graph.hpp"

#include <algorithm>
#include <string>

#include "ggmident/errors.hpp"

namespace ggmident {

Graph::Graph(int node_count) : node_count_(node_count) {
    if (node_count < 1)
        throw InvalidSpec("graph needs at least one node, got " + std::to_string(node_count));
    adjacency_.resize(static_cast<std::size_t>(node_count) + 1);
}

void Graph::check_node(int u) const {
    if (u < 1 || u > node_count_)
        throw InvalidIndex("node " + std::to_string(u) + " outside 1.." +
                           std::to_string(node_count_));
}

void Graph::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw InvalidSpec("self loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!edges_.insert({u, v}).second) return;
    auto& au = adjacency_[static_cast<std::size_t>(u)];
    auto& av = adjacency_[static_cast<std::size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

void Graph::remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u > v) std::swap(u, v);
    if (edges_.erase({u, v}) == 0) return;
    auto& au = adjacency_[static_cast<std::size_t>(u)];
    auto& av = adjacency_[static_cast<std::size_t>(v)];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    av.erase(std::lower_bound(av.begin(), av.end(), u));
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_node(u);
    return adjacency_[static_cast<std::size_t>(u)];
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

int Graph::max_degree() const {
    int best = 0;
    for (int u = 1; u <= node_count_; ++u) best = std::max(best, degree(u));
    return best;
}

bool Graph::operator==(const Graph& other) const {
    return node_count_ == other.node_count_ && edges_ == other.edges_;
}

namespace {

/// Depth-first reach over an active-node mask, optionally skipping one
/// edge. Masks are indexed by label.
void reach(const Graph& g, int start, const std::vector<char>& active, int skip_u, int skip_v,
           std::vector<char>& seen) {
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            if (!active[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
            if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            stack.push_back(y);
        }
    }
}

std::vector<char> active_mask(const Graph& g, const IndexSet& active) {
    std::vector<char> mask(static_cast<std::size_t>(g.node_count()) + 1, 0);
    for (int u : active) {
        if (u < 1 || u > g.node_count())
            throw InvalidIndex("active node " + std::to_string(u) + " outside 1.." +
                               std::to_string(g.node_count()));
        mask[static_cast<std::size_t>(u)] = 1;
    }
    return mask;
}

bool separated(const Graph& g, const IndexSet& s, int u, int v, bool skip_direct_edge) {
    if (u == v) throw InvalidConditioningSet("separation requires distinct nodes");
    if (s.contains(u) || s.contains(v))
        throw InvalidConditioningSet("separator contains an endpoint of (" + std::to_string(u) +
                                     "," + std::to_string(v) + ")");
    std::vector<char> active(static_cast<std::size_t>(g.node_count()) + 1, 1);
    active[0] = 0;
    for (int x : s) {
        if (x < 1 || x > g.node_count())
            throw InvalidIndex("separator node " + std::to_string(x) + " outside 1.." +
                               std::to_string(g.node_count()));
        active[static_cast<std::size_t>(x)] = 0;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()) + 1, 0);
    if (skip_direct_edge) {
        reach(g, u, active, u, v, seen);
    } else {
        reach(g, u, active, 0, 0, seen);
    }
    return !seen[static_cast<std::size_t>(v)];
}

/// Visits subsets of pool by size 0..max_size, lexicographic within each
/// size; stops when the visitor returns true.
template <typename Visit>
bool any_subset_impl(const std::vector<int>& pool, int max_size, Visit&& visit) {
    const int n = static_cast<int>(pool.size());
    max_size = std::min(max_size, n);
    std::vector<int> pick;
    for (int size = 0; size <= max_size; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        // first combination 0,1,...,size-1
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> subset(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
                subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            if (visit(IndexSet(std::move(subset)))) return true;
            if (size == 0) break;
            // advance the combination
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

bool pair_strongly_separable_on(const Graph& g, const IndexSet& active, int u, int v, int k) {
    const int delta = g.has_edge(u, v) ? 1 : 0;
    std::vector<int> pool;
    for (int x : active)
        if (x != u && x != v) pool.push_back(x);
    // Disconnected endpoints fall out naturally: the empty set separates.
    return any_subset_impl(pool, k - delta, [&](const IndexSet& s) {
        // Restrict attention to the induced subgraph on `active`: treat
        // everything outside it as removed alongside S.
        IndexSet blocked = s.unioned(active.complement(g.node_count()));
        return separated(g, blocked, u, v, /*skip_direct_edge=*/true);
    });
}

bool strongly_separable_on(const Graph& g, const IndexSet& active, int k) {
    const auto& nodes = active.members();
    for (std::size_t b = 1; b < nodes.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            if (!pair_strongly_separable_on(g, active, nodes[a], nodes[b], k)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<IndexSet> connected_components(const Graph& g, const IndexSet& active) {
    const std::vector<char> mask = active_mask(g, active);
    std::vector<char> assigned(static_cast<std::size_t>(g.node_count()) + 1, 0);
    std::vector<IndexSet> parts;
    for (int u : active) {
        if (assigned[static_cast<std::size_t>(u)]) continue;
        std::vector<char> seen(static_cast<std::size_t>(g.node_count()) + 1, 0);
        reach(g, u, mask, 0, 0, seen);
        std::vector<int> part;
        for (int x : active) {
            if (seen[static_cast<std::size_t>(x)]) {
                part.push_back(x);
                assigned[static_cast<std::size_t>(x)] = 1;
            }
        }
        parts.emplace_back(std::move(part));
    }
    return parts;
}

bool is_separator(const Graph& g, const IndexSet& s, int u, int v) {
    return separated(g, s, u, v, /*skip_direct_edge=*/false);
}

bool separates_excluding_edge(const Graph& g, const IndexSet& s, int u, int v) {
    return separated(g, s, u, v, /*skip_direct_edge=*/true);
}

bool is_degree_bounded(const Graph& g, int k) {
    if (k < 0) throw InvalidSpec("degree bound must be non-negative");
    return g.max_degree() <= k;
}

bool is_strongly_k_separable_pair(const Graph& g, int u, int v, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    return pair_strongly_separable_on(g, IndexSet::full(g.node_count()), u, v, k);
}

bool is_strongly_k_separable(const Graph& g, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    return strongly_separable_on(g, IndexSet::full(g.node_count()), k);
}

bool is_k_separable(const Graph& g, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    const int p = g.node_count();
    for (int v = 2; v <= p; ++v) {
        for (int u = 1; u < v; ++u) {
            if (g.has_edge(u, v)) continue;
            std::vector<int> pool;
            for (int x = 1; x <= p; ++x)
                if (x != u && x != v) pool.push_back(x);
            const bool found = any_subset_impl(
                pool, k, [&](const IndexSet& s) { return is_separator(g, s, u, v); });
            if (!found) return false;
        }
    }
    return true;
}

bool is_generalized_fvs(const Graph& g, const IndexSet& f, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    for (int x : f)
        if (x < 1 || x > g.node_count())
            throw InvalidIndex("candidate node " + std::to_string(x) + " outside 1.." +
                               std::to_string(g.node_count()));
    return strongly_separable_on(g, f.complement(g.node_count()), k);
}

Graph induced_subgraph(const Graph& g, const IndexSet& keep) {
    if (keep.empty()) throw InvalidSpec("induced subgraph needs at least one node");
    Graph out(keep.size());
    const auto& labels = keep.members();
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            if (g.has_edge(labels[a], labels[b]))
                out.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        }
    }
    return out;
}

std::vector<Edge> edges_outside(const Graph& g, const IndexSet& f) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (!f.contains(e.first) && !f.contains(e.second)) out.push_back(e);
    }
    return out;
}

bool is_acyclic(const Graph& g) {
    const int p = g.node_count();
    std::vector<int> parent(static_cast<std::size_t>(p) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(p) + 1, 0);
    for (int root = 1; root <= p; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<int> stack{root};
        seen[static_cast<std::size_t>(root)] = 1;
        parent[static_cast<std::size_t>(root)] = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (y == parent[static_cast<std::size_t>(x)]) continue;
                if (seen[static_cast<std::size_t>(y)]) return false;
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
        }
    }
    return true;
}

}  // namespace ggmident
