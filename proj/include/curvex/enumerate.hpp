#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/graph.hpp"

namespace curvex {

namespace enum_detail {

// Upper-triangle adjacency bits in column-major order (the graph6 order),
// packed so that lexicographic comparison of the bit string is numeric
// comparison of the key. Fits n <= 11.
inline std::uint64_t adjacency_key(const std::vector<std::uint16_t>& adj, int n) {
    const int total = n * (n - 1) / 2;
    std::uint64_t key = 0;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (adj[i] & (1u << j)) key |= std::uint64_t(1) << (total - 1 - b);
    return key;
}

struct CanonSearch {
    int n;
    int total;
    const std::vector<std::uint16_t>* adj;
    std::uint64_t best;
    std::vector<int> perm;  // perm[pos] = original vertex
    std::uint16_t used;

    // Lexicographically minimal key over all vertex orderings, found by
    // placing vertices one position at a time and pruning any prefix that
    // already exceeds the best known key.
    void run() {
        place(0, 0, 0);
    }

    void place(int pos, std::uint64_t prefix, int bits) {
        if (pos == n) {
            best = std::min(best, prefix << (total - bits));
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used & (1u << cand)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < pos; ++i)
                col = (col << 1) | ((*adj)[perm[i]] >> cand & 1u);
            std::uint64_t next = (prefix << pos) | col;
            int next_bits = bits + pos;
            // compare against the same-length prefix of the incumbent
            if (next > (best >> (total - next_bits))) continue;
            perm[pos] = cand;
            used |= std::uint16_t(1u << cand);
            place(pos + 1, next, next_bits);
            used &= std::uint16_t(~(1u << cand));
        }
    }
};

inline std::vector<std::uint16_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint16_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint16_t(1u << v);
        adj[v] |= std::uint16_t(1u << u);
    }
    return adj;
}

}  // namespace enum_detail

// Canonical form: the lexicographically minimal upper-triangle adjacency
// bitstring over all n! vertex orderings. Two graphs on the same order are
// isomorphic iff their keys agree.
inline std::uint64_t canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw OrderTooLarge("canonical_key supports n <= 11");
    if (n == 1) return 0;
    std::vector<std::uint16_t> adj = enum_detail::adjacency_masks(g);
    enum_detail::CanonSearch cs;
    cs.n = n;
    cs.total = n * (n - 1) / 2;
    cs.adj = &adj;
    cs.best = ~std::uint64_t(0) >> (64 - cs.total);
    cs.perm.assign(n, 0);
    cs.used = 0;
    cs.run();
    return cs.best;
}

inline Graph graph_from_key(int n, std::uint64_t key) {
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (key & (std::uint64_t(1) << (total - 1 - b))) edges.emplace_back(i, j);
    return Graph(n, edges);
}

namespace enum_detail {

// Connected graphs of order n up to isomorphism, as canonical keys, by
// augmenting every (n-1)-vertex class with one vertex over each nonempty
// neighborhood. Complete because every connected graph has a vertex whose
// removal keeps it connected (any spanning-tree leaf).
inline std::vector<std::uint64_t> connected_keys(int n) {
    if (n == 1) return {0};
    std::vector<std::uint64_t> prev = connected_keys(n - 1);
    std::unordered_set<std::uint64_t> found;
    std::vector<std::uint16_t> adj(n);
    for (std::uint64_t pk : prev) {
        Graph base = graph_from_key(n - 1, pk);
        std::vector<std::uint16_t> base_adj = adjacency_masks(base);
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            for (int v = 0; v < n - 1; ++v)
                adj[v] = std::uint16_t(base_adj[v] | ((mask >> v & 1u) << (n - 1)));
            adj[n - 1] = std::uint16_t(mask);
            CanonSearch cs;
            cs.n = n;
            cs.total = n * (n - 1) / 2;
            cs.adj = &adj;
            cs.best = ~std::uint64_t(0) >> (64 - cs.total);
            cs.perm.assign(n, 0);
            cs.used = 0;
            cs.run();
            found.insert(cs.best);
        }
    }
    std::vector<std::uint64_t> keys(found.begin(), found.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace enum_detail

// One representative per isomorphism class of connected graphs, in canonical
// key order. Capped at n = 7; larger censuses run from external graph6
// files.
inline std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw InvalidParameter("enumerate_connected needs n >= 1");
    if (n > 7) throw OrderTooLarge("built-in enumeration is capped at n = 7; scan a graph6 file");
    std::vector<Graph> out;
    for (std::uint64_t key : enum_detail::connected_keys(n)) out.push_back(graph_from_key(n, key));
    return out;
}

}  // namespace curvex
