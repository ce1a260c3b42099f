#pragma once

#include <optional>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/graph.hpp"

namespace curvex {

struct EmbeddingReport {
    bool induced;
    bool isometric;
};

// Verifies a candidate vertex map (this is a checker for maps produced by
// the construction machinery, not a subgraph-isomorphism search). The map
// must be injective into V(big). Induced: the image induces exactly g.
// Isometric: additionally both graphs are connected and the map preserves
// all pairwise distances.
inline EmbeddingReport check_embedding(const Graph& g, const Graph& big,
                                       const std::vector<int>& map) {
    const int n = g.vertex_count();
    if (int(map.size()) != n) throw MapInvalid("map length differs from |V(g)|");
    std::vector<bool> used(big.vertex_count(), false);
    for (int v : map) {
        if (v < 0 || v >= big.vertex_count()) throw MapInvalid("map image out of range");
        if (used[v]) throw MapInvalid("map is not injective");
        used[v] = true;
    }

    bool induced = true;
    for (int i = 0; i < n && induced; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j) != big.has_edge(map[i], map[j])) {
                induced = false;
                break;
            }

    bool isometric = is_connected(g);
    if (isometric) {
        std::vector<std::vector<int>> dg(n);
        for (int i = 0; i < n; ++i) dg[i] = bfs_distances(g, i);
        for (int i = 0; i < n && isometric; ++i) {
            std::vector<int> db = bfs_distances(big, map[i]);
            for (int j = 0; j < n; ++j)
                if (db[map[j]] != dg[i][j]) {
                    isometric = false;
                    break;
                }
        }
    }
    return {induced, isometric};
}

struct InducedEmbedding {
    std::vector<int> map;
    bool isometric;
};

// The candidate map comes from a construction trace; returns nullopt when
// the image fails to induce g.
inline std::optional<InducedEmbedding> find_induced_embedding(const Graph& g, const Graph& big,
                                                              const std::vector<int>& candidate) {
    EmbeddingReport rep = check_embedding(g, big, candidate);
    if (!rep.induced) return std::nullopt;
    return InducedEmbedding{candidate, rep.isometric};
}

}  // namespace curvex
