#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "curvex/errors.hpp"

namespace curvex {

// Immutable simple undirected graph with vertices 0..n-1. All operations
// return new graphs; instances are safe to share across threads.
class Graph {
  public:
    explicit Graph(int n, std::vector<std::pair<int, int>> edges = {}) : n_(n), adj_(n) {
        if (n < 1) throw InvalidParameter("graph needs at least one vertex");
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw VertexOutOfRange("edge endpoint out of range");
            if (u == v) throw InvalidParameter("self-loop rejected");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        m_ = 0;
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            m_ += int(nb.size());
        }
        m_ /= 2;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return int(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_.at(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
};

// BFS distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.vertex_count()) throw VertexOutOfRange("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    std::vector<int> d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

struct DistanceMatrix {
    int n = 0;
    std::vector<std::vector<int>> d;
    int max_entry() const {
        int m = 0;
        for (const auto& row : d)
            for (int x : row) m = std::max(m, x);
        return m;
    }
};

inline DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.vertex_count();
    dm.d.resize(dm.n);
    for (int u = 0; u < dm.n; ++u) {
        dm.d[u] = bfs_distances(g, u);
        for (int x : dm.d[u])
            if (x < 0) throw Disconnected("distance matrix of a disconnected graph");
    }
    return dm;
}

inline int diameter(const Graph& g) { return distance_matrix(g).max_entry(); }

// ---- families ----

inline Graph path_graph(int k) {
    if (k < 1) throw InvalidParameter("path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("simple cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph empty_graph(int a) {
    if (a < 1) throw InvalidParameter("empty graph needs a >= 1");
    return Graph(a);
}

// Parts are laid out consecutively; edges connect vertices of distinct parts.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw InvalidParameter("multipartite graph needs at least one part");
    int n = 0;
    for (int a : parts) {
        if (a < 1) throw InvalidParameter("multipartite part sizes must be >= 1");
        n += a;
    }
    std::vector<int> part_of(n);
    int at = 0;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[at++] = int(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph hypercube_graph(int d) {
    if (d < 1) throw InvalidParameter("hypercube needs d >= 1");
    if (d > 20) throw InvalidParameter("hypercube dimension too large");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b) {
            int v = u ^ (1 << b);
            if (u < v) e.emplace_back(u, v);
        }
    return Graph(n, e);
}

// Vertex (u, v) of G box H gets index u*|V(H)| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < ng; ++u)
        for (auto [v, w] : h.edges()) e.emplace_back(u * nh + v, u * nh + w);
    for (auto [u, w] : g.edges())
        for (int v = 0; v < nh; ++v) e.emplace_back(u * nh + v, w * nh + v);
    return Graph(ng * nh, e);
}

inline Graph grid_graph(int n, int m) { return cartesian_product(path_graph(n), path_graph(m)); }

inline Graph torus_graph(int n, int d) {
    if (d < 1) throw InvalidParameter("torus needs d >= 1");
    Graph t = cycle_graph(n);
    for (int i = 1; i < d; ++i) t = cartesian_product(t, cycle_graph(n));
    return t;
}

// Four paths (one P_k, three P_{k+1}) glued at both endpoints. Enumeration:
// first shared endpoint, the k-2 interior vertices of P_k, the second shared
// endpoint, then the k-1 interior vertices of each P_{k+1} in path order.
// k <= 2 would need parallel edges, so it is rejected.
inline Graph basket_graph(int k) {
    if (k < 3) throw InvalidParameter("basket graph needs k >= 3");
    const int n = 4 * k - 3;
    const int left = 0, right = k - 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    for (int b = 0; b < 3; ++b) {
        int s = k + b * (k - 1);
        e.emplace_back(left, s);
        for (int i = 0; i + 1 < k - 1; ++i) e.emplace_back(s + i, s + i + 1);
        e.emplace_back(s + k - 2, right);
    }
    return Graph(n, e);
}

// ---- compositions ----

// Join: all of G's vertices first, every cross edge present.
inline Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) e.emplace_back(u, ng + v);
    return Graph(ng + nh, e);
}

// Coalescence G o H at (u, v): the merged vertex comes first, then V(G)\{u}
// in original order, then V(H)\{v}.
inline Graph coalesce(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.vertex_count()) throw VertexOutOfRange("coalesce: u out of range");
    if (v < 0 || v >= h.vertex_count()) throw VertexOutOfRange("coalesce: v out of range");
    const int ng = g.vertex_count(), nh = h.vertex_count();
    auto map_g = [&](int a) { return a == u ? 0 : 1 + (a < u ? a : a - 1); };
    auto map_h = [&](int b) { return b == v ? 0 : ng + (b < v ? b : b - 1); };
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges()) e.emplace_back(map_g(a), map_g(b));
    for (auto [a, b] : h.edges()) e.emplace_back(map_h(a), map_h(b));
    return Graph(ng + nh - 1, e);
}

// New vertex gets index n and one edge to u.
inline Graph add_pendant(const Graph& g, int u) {
    if (u < 0 || u >= g.vertex_count()) throw VertexOutOfRange("add_pendant: u out of range");
    std::vector<std::pair<int, int>> e = g.edges();
    e.emplace_back(u, g.vertex_count());
    return Graph(g.vertex_count() + 1, e);
}

inline std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace curvex
