#pragma once

#include <random>
#include <vector>

#include "curvex/graph.hpp"

namespace curvex_test {

// Random spanning tree plus bernoulli extra edges; always connected.
inline curvex::Graph random_connected_graph(std::mt19937_64& rng, int n, double extra = 0.35) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(int(rng() % v), v);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < extra) edges.emplace_back(u, v);
    return curvex::Graph(n, edges);
}

// Uniform random labeled tree via a Pruefer sequence.
inline curvex::Graph random_tree(std::mt19937_64& rng, int n) {
    if (n == 1) return curvex::Graph(1);
    if (n == 2) return curvex::Graph(2, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (int& p : pruefer) p = int(rng() % n);
    std::vector<int> degree(n, 1);
    for (int p : pruefer) ++degree[p];
    std::vector<std::pair<int, int>> edges;
    for (int p : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                edges.emplace_back(leaf, p);
                --degree[leaf];
                --degree[p];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return curvex::Graph(n, edges);
}

}  // namespace curvex_test
