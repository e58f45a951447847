#ifndef GGMIDENT_TESTS_SUPPORT_HPP
#define GGMIDENT_TESTS_SUPPORT_HPP

// Shared fixtures for the oracle-driven suites: deterministic graph
// builders and ground-truth models with a usable dependence margin.

#include <vector>

#include "ggmident/ci_oracle.hpp"
#include "ggmident/graph.hpp"
#include "ggmident/rng.hpp"
#include "ggmident/synth.hpp"

namespace ggmident::testsupport {

inline Graph path_graph(int p) {
    Graph g(p);
    for (int u = 1; u < p; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph cycle_graph(int p) {
    Graph g = path_graph(p);
    g.add_edge(1, p);
    return g;
}

inline Graph star_graph(int p) {
    Graph g(p);
    for (int u = 2; u <= p; ++u) g.add_edge(1, u);
    return g;
}

inline Graph example1_graph(int p) {
    Graph g(p);
    g.add_edge(1, 2);
    for (int u = 3; u <= p; ++u) {
        g.add_edge(u, 1);
        g.add_edge(u, 2);
    }
    return g;
}

inline Graph example2_graph(int p) {
    Graph g(p);
    for (int u = 1; u < p - 2; ++u) g.add_edge(u, u + 1);
    for (int u = 1; u <= p - 2; ++u) {
        g.add_edge(u, p - 1);
        g.add_edge(u, p);
    }
    return g;
}

inline Graph random_graph(int p, double density, Rng& rng) {
    Graph g(p);
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v)
            if (rng.uniform01() < density) g.add_edge(u, v);
    return g;
}

inline Graph random_tree(int p, Rng& rng) {
    Graph g(p);
    for (int u = 2; u <= p; ++u) g.add_edge(u, rng.uniform_int(1, u - 1));
    return g;
}

inline Graph random_degree_bounded(int p, int k, Rng& rng) {
    Graph g(p);
    std::vector<Edge> candidates;
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v) candidates.push_back({u, v});
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
        std::swap(candidates[static_cast<std::size_t>(i)],
                  candidates[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    for (const Edge& e : candidates)
        if (g.degree(e.first) < k && g.degree(e.second) < k && rng.uniform01() < 0.8)
            g.add_edge(e.first, e.second);
    return g;
}

inline std::shared_ptr<CiOracle> exact_oracle_for(const GroundTruthModel& model) {
    return cached(make_exact_oracle(model.sigma, model.epsilon_zero));
}

inline GroundTruthModel model_for(const Graph& g, std::uint64_t seed, int beta_cap) {
    return make_model_for_graph(g, 0.2, 0.4, seed, beta_cap);
}

}  // namespace ggmident::testsupport

#endif  // GGMIDENT_TESTS_SUPPORT_HPP
