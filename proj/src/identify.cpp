#include "ggmident/identify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "ggmident/errors.hpp"

namespace ggmident {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// All size-`size` subsets of pool in lexicographic order.
std::vector<IndexSet> subsets_of_size(const std::vector<int>& pool, int size) {
    std::vector<IndexSet> out;
    const int n = static_cast<int>(pool.size());
    if (size > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> subset(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        out.emplace_back(std::move(subset));
        if (size == 0) break;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Visits subsets by size 0..max_size, lexicographic within each size
/// (optionally reversed within size); stops early when the visitor
/// returns true.
template <typename Visit>
bool visit_subsets(const std::vector<int>& pool, int max_size, bool reverse_within_size,
                   Visit&& visit) {
    max_size = std::min<int>(max_size, static_cast<int>(pool.size()));
    for (int size = 0; size <= max_size; ++size) {
        std::vector<IndexSet> level = subsets_of_size(pool, size);
        if (reverse_within_size) std::reverse(level.begin(), level.end());
        for (const IndexSet& s : level) {
            if (visit(s)) return true;
        }
    }
    return false;
}

std::vector<int> pool_excluding(int p, const IndexSet& base, int u, int v) {
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(p));
    for (int x = 1; x <= p; ++x) {
        if (x == u || x == v || base.contains(x)) continue;
        pool.push_back(x);
    }
    return pool;
}

/// Index-parallel loop with deterministic per-index outputs. The first
/// exception wins and is rethrown after all workers join.
void for_each_index(int count, bool parallel, const std::function<void(int)>& body) {
    if (!parallel || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 2;
    const int workers = std::min<int>(count, std::max<unsigned>(2, hw));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    break;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

/// One conditioning set's adjacency evidence: with D_x the dependence
/// graph given s + {x}, accept when an endpoint is isolated in the
/// opposite graph, or both components leave room and are disjoint.
bool adjacency_witness_holds(const CiOracle& oracle, int u, int v, const IndexSet& s) {
    const DependenceGraph dep_v = dependence_graph(oracle, s.with(v));
    const IndexSet comp_u = dep_v.component_of(u);
    if (comp_u.size() == 1) return true;  // u sees only v outside s

    const DependenceGraph dep_u = dependence_graph(oracle, s.with(u));
    const IndexSet comp_v = dep_u.component_of(v);
    if (comp_v.size() == 1) return true;  // v sees only u outside s

    const bool escape_u = comp_u.size() < dep_v.active.size();
    const bool escape_v = comp_v.size() < dep_u.active.size();
    if (!escape_u || !escape_v) return false;
    return !comp_u.without(u).without(v).intersects(comp_v.without(u).without(v));
}

PairClassification classify_pair(const CiOracle& oracle, int u, int v, int k,
                                 const IndexSet& base, bool reverse_within_size) {
    const int p = oracle.dim();
    const std::vector<int> pool = pool_excluding(p, base, u, v);
    PairClassification result{u, v, PairStatus::kUnresolved, std::nullopt};

    const bool non_adjacent =
        visit_subsets(pool, k, reverse_within_size, [&](const IndexSet& extra) {
            const IndexSet s = base.unioned(extra);
            if (!oracle.query(u, v, s).independent) return false;
            if (!is_faithful(oracle, u, v, s)) return false;
            result = {u, v, PairStatus::kNonNeighbor, s};
            return true;
        });
    if (non_adjacent) return result;

    visit_subsets(pool, k - 1, reverse_within_size, [&](const IndexSet& extra) {
        const IndexSet s = base.unioned(extra);
        if (!adjacency_witness_holds(oracle, u, v, s)) return false;
        result = {u, v, PairStatus::kNeighbor, s};
        return true;
    });
    return result;
}

std::vector<Edge> neighbor_edges(const std::vector<PairClassification>& classifications) {
    std::vector<Edge> edges;
    for (const auto& c : classifications) {
        if (c.status == PairStatus::kNeighbor)
            edges.emplace_back(std::min(c.u, c.v), std::max(c.u, c.v));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

const char* to_string(PairStatus status) {
    switch (status) {
        case PairStatus::kNonNeighbor: return "non_neighbor";
        case PairStatus::kNeighbor: return "neighbor";
        case PairStatus::kUnresolved: return "unresolved";
    }
    return "unresolved";
}

std::vector<IndexSet> DependenceGraph::components() const {
    const auto& nodes = active.members();
    std::vector<int> parent(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto position = [&](int label) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), label) - nodes.begin());
    };
    for (const Edge& e : edges) {
        const int a = find(position(e.first));
        const int b = find(position(e.second));
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<std::vector<int>> grouped(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        grouped[static_cast<std::size_t>(find(static_cast<int>(i)))].push_back(nodes[i]);
    std::vector<IndexSet> out;
    for (auto& group : grouped) {
        if (!group.empty()) out.emplace_back(std::move(group));
    }
    // Roots appear in arbitrary order; sort components by first member.
    std::sort(out.begin(), out.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.members() < b.members(); });
    return out;
}

IndexSet DependenceGraph::component_of(int h) const {
    if (!active.contains(h))
        throw InvalidIndex("node " + std::to_string(h) + " is not active in the dependence graph");
    for (const IndexSet& part : components()) {
        if (part.contains(h)) return part;
    }
    return IndexSet{h};
}

DependenceGraph dependence_graph(const CiOracle& oracle, const IndexSet& conditioning,
                                 const IndexSet& exclude) {
    const int p = oracle.dim();
    const IndexSet active = conditioning.unioned(exclude).complement(p);
    DependenceGraph dep{active, conditioning, {}};
    const auto& nodes = active.members();
    for (std::size_t b = 1; b < nodes.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            if (!oracle.query(nodes[a], nodes[b], conditioning).independent)
                dep.edges.emplace_back(nodes[a], nodes[b]);
        }
    }
    return dep;
}

bool is_faithful(const CiOracle& oracle, int u, int v, const IndexSet& s) {
    if (u == v) throw InvalidConditioningSet("faithfulness check requires distinct nodes");
    if (s.contains(u) || s.contains(v))
        throw InvalidConditioningSet("conditioning set contains an endpoint");
    const DependenceGraph dep = dependence_graph(oracle, s);
    return !dep.component_of(u).contains(v);
}

std::vector<IndexSet> screening_witnesses(const CiOracle& oracle, int u, int k) {
    if (k < 0) throw InvalidSpec("degree bound must be non-negative");
    const int p = oracle.dim();
    if (u < 1 || u > p)
        throw InvalidIndex("node " + std::to_string(u) + " outside 1.." + std::to_string(p));
    std::vector<int> pool;
    for (int x = 1; x <= p; ++x)
        if (x != u) pool.push_back(x);

    std::vector<IndexSet> witnesses;
    visit_subsets(pool, k, /*reverse_within_size=*/false, [&](const IndexSet& s) {
        for (int w = 1; w <= p; ++w) {
            if (w == u || s.contains(w)) continue;
            if (!oracle.query(u, w, s).independent) return false;  // next subset
        }
        witnesses.push_back(s);
        return false;
    });
    return witnesses;
}

std::vector<IndexSet> nonadjacency_witnesses(const CiOracle& oracle, int u, int v, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    const std::vector<int> pool = pool_excluding(oracle.dim(), {}, u, v);
    std::vector<IndexSet> witnesses;
    visit_subsets(pool, k, /*reverse_within_size=*/false, [&](const IndexSet& s) {
        if (oracle.query(u, v, s).independent && is_faithful(oracle, u, v, s))
            witnesses.push_back(s);
        return false;
    });
    return witnesses;
}

std::vector<IndexSet> adjacency_witnesses(const CiOracle& oracle, int u, int v, int k) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    const std::vector<int> pool = pool_excluding(oracle.dim(), {}, u, v);
    std::vector<IndexSet> witnesses;
    visit_subsets(pool, k - 1, /*reverse_within_size=*/false, [&](const IndexSet& s) {
        if (adjacency_witness_holds(oracle, u, v, s)) witnesses.push_back(s);
        return false;
    });
    return witnesses;
}

IdentificationReport identify_degree_bounded(const CiOracle& oracle, int k,
                                             const IdentifyOptions& options) {
    if (k < 0) throw InvalidSpec("degree bound must be non-negative");
    const auto start = Clock::now();
    const std::uint64_t queries_before = oracle.query_count();
    const int p = oracle.dim();

    IdentificationReport report;
    report.k = k;

    std::vector<std::vector<IndexSet>> witnesses(static_cast<std::size_t>(p));
    for_each_index(p, options.parallel, [&](int i) {
        witnesses[static_cast<std::size_t>(i)] = screening_witnesses(oracle, i + 1, k);
    });

    for (int u = 1; u <= p; ++u) {
        const auto& list = witnesses[static_cast<std::size_t>(u - 1)];
        if (list.empty()) {
            report.unscreened_nodes.push_back(u);
            continue;
        }
        IndexSet hood = list.front();
        for (std::size_t i = 1; i < list.size(); ++i) hood = hood.intersect(list[i]);
        report.neighborhoods[u] = hood;
    }

    report.verdict = report.unscreened_nodes.empty();
    if (report.verdict) {
        std::set<Edge> edges;
        for (const auto& [u, hood] : report.neighborhoods) {
            for (int v : hood) edges.insert({std::min(u, v), std::max(u, v)});
        }
        report.recovered_edges.assign(edges.begin(), edges.end());
    } else {
        report.neighborhoods.clear();
    }

    report.stats = {oracle.query_count() - queries_before, ms_since(start)};
    return report;
}

IdentificationReport identify_strongly_separable(const CiOracle& oracle, int k,
                                                 const IdentifyOptions& options) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    const auto start = Clock::now();
    const std::uint64_t queries_before = oracle.query_count();
    const int p = oracle.dim();

    std::vector<std::pair<int, int>> pairs;
    for (int u = 2; u <= p; ++u)
        for (int v = 1; v < u; ++v) pairs.emplace_back(u, v);

    IdentificationReport report;
    report.k = k;
    report.classifications.resize(pairs.size());
    for_each_index(static_cast<int>(pairs.size()), options.parallel, [&](int i) {
        const auto [u, v] = pairs[static_cast<std::size_t>(i)];
        report.classifications[static_cast<std::size_t>(i)] =
            classify_pair(oracle, u, v, k, {}, options.reverse_within_size);
    });

    report.verdict = std::all_of(
        report.classifications.begin(), report.classifications.end(),
        [](const PairClassification& c) { return c.status != PairStatus::kUnresolved; });
    report.recovered_edges = neighbor_edges(report.classifications);
    report.stats = {oracle.query_count() - queries_before, ms_since(start)};
    return report;
}

FvsReport identify_generalized_fvs(const CiOracle& oracle, int k, int ell,
                                   const IdentifyOptions& options) {
    if (k < 1) throw InvalidSpec("separability order must be positive");
    const int p = oracle.dim();
    if (ell < 0 || ell > p - 2)
        throw InvalidSpec("candidate-set size must lie in 0..p-2, got " + std::to_string(ell));

    const auto start = Clock::now();
    const std::uint64_t queries_before = oracle.query_count();

    FvsReport report;
    report.k = k;
    report.ell = ell;

    std::vector<int> all_nodes(static_cast<std::size_t>(p));
    for (int x = 1; x <= p; ++x) all_nodes[static_cast<std::size_t>(x - 1)] = x;

    for (const IndexSet& f : subsets_of_size(all_nodes, ell)) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 2; u <= p; ++u) {
            if (f.contains(u)) continue;
            for (int v = 1; v < u; ++v) {
                if (!f.contains(v)) pairs.emplace_back(u, v);
            }
        }

        bool qualified = true;
        std::vector<PairClassification> classifications(pairs.size());
        if (options.parallel) {
            for_each_index(static_cast<int>(pairs.size()), true, [&](int i) {
                const auto [u, v] = pairs[static_cast<std::size_t>(i)];
                classifications[static_cast<std::size_t>(i)] =
                    classify_pair(oracle, u, v, k, f, options.reverse_within_size);
            });
            qualified = std::all_of(
                classifications.begin(), classifications.end(),
                [](const PairClassification& c) { return c.status != PairStatus::kUnresolved; });
        } else {
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                classifications[i] = classify_pair(oracle, pairs[i].first, pairs[i].second, k, f,
                                                   options.reverse_within_size);
                if (classifications[i].status == PairStatus::kUnresolved) {
                    qualified = false;
                    break;
                }
            }
        }
        if (qualified) report.qualifying.push_back({f, neighbor_edges(classifications)});
    }

    report.stats = {oracle.query_count() - queries_before, ms_since(start)};
    return report;
}

}  // namespace ggmident
