#pragma once

// Test-only oracles, deliberately independent of the library's own
// algorithms: distances via Floyd-Warshall instead of BFS, exhaustive
// enumeration instead of branch and bound.

#include <random>
#include <vector>

#include "equicut/graph.hpp"
#include "equicut/rational.hpp"

namespace oracles {

inline std::vector<std::vector<int>> floyd_warshall(const equicut::Graph& g) {
    int v = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(v, std::vector<int>(v, inf));
    for (int i = 0; i < v; ++i) d[i][i] = 0;
    for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
    for (int k = 0; k < v; ++k)
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline long long wiener_by_floyd(const equicut::Graph& g) {
    auto d = floyd_warshall(g);
    long long total = 0;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) total += d[i][j];
    return total;
}

inline int diameter_by_floyd(const equicut::Graph& g) {
    auto d = floyd_warshall(g);
    int best = 0;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j) best = std::max(best, d[i][j]);
    return best;
}

/// Uniform-ish random connected graph: G(v, p) resampled until connected.
inline equicut::Graph random_connected_graph(int v, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = std::min(0.9, 2.5 / v + 0.15);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (coin(rng) < p) edges.emplace_back(i, j);
        equicut::Graph g(v, std::move(edges));
        if (g.is_connected()) return g;
    }
}

} // namespace oracles
