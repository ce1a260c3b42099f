#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/graph.hpp"
#include "curvex/index_value.hpp"
#include "curvex/linalg.hpp"

namespace curvex {

inline RatMatrix to_rat_matrix(const DistanceMatrix& dm) {
    RatMatrix m(dm.n, dm.n);
    for (int i = 0; i < dm.n; ++i)
        for (int j = 0; j < dm.n; ++j) m(i, j) = dm.d[i][j];
    return m;
}

// A unit-sum vector x with D x = constant * 1. Construction re-verifies both
// identities exactly, so a Potential in hand is a complete proof that the
// graph's curvature index equals `constant` (the intersection point is
// unique because D is symmetric).
struct Potential {
    RatVector x;
    Rat sum;       // always 1
    Rat constant;  // c with D x = c 1

    static Potential checked(const DistanceMatrix& dm, RatVector x) {
        if (int(x.size()) != dm.n) throw CertificateViolation("potential length != order");
        Rat s = vec_sum(x);
        if (s != 1) throw CertificateViolation("potential entries must sum to 1");
        Rat c = 0;
        for (int j = 0; j < dm.n; ++j) c += Rat(dm.d[0][j]) * x[j];
        for (int i = 1; i < dm.n; ++i) {
            Rat row = 0;
            for (int j = 0; j < dm.n; ++j) row += Rat(dm.d[i][j]) * x[j];
            if (row != c) throw CertificateViolation("D x is not a constant vector");
        }
        return Potential{std::move(x), std::move(s), std::move(c)};
    }

    // Same verification but one BFS row at a time; avoids materializing the
    // dense distance matrix for large constructions.
    static Potential checked_streaming(const Graph& g, RatVector x) {
        const int n = g.vertex_count();
        if (int(x.size()) != n) throw CertificateViolation("potential length != order");
        Rat s = vec_sum(x);
        if (s != 1) throw CertificateViolation("potential entries must sum to 1");
        Rat c = 0;
        for (int i = 0; i < n; ++i) {
            std::vector<int> row = bfs_distances(g, i);
            Rat acc = 0;
            for (int j = 0; j < n; ++j) {
                if (row[j] < 0) throw Disconnected("potential check on a disconnected graph");
                if (x[j] != 0) acc += Rat(row[j]) * x[j];
            }
            if (i == 0)
                c = acc;
            else if (acc != c)
                throw CertificateViolation("D x is not a constant vector");
        }
        return Potential{std::move(x), std::move(s), std::move(c)};
    }
};

struct IndexResult {
    IndexValue index;
    std::optional<Potential> potential;  // present iff the index is finite
};

inline IndexResult curvature_index_of_matrix(const DistanceMatrix& dm) {
    AffineIndexSolution sol = solve_affine_index(to_rat_matrix(dm));
    if (sol.index.is_infinite()) return {sol.index, std::nullopt};
    return {sol.index, Potential::checked(dm, std::move(*sol.witness))};
}

inline IndexResult curvature_index(const Graph& g) {
    return curvature_index_of_matrix(distance_matrix(g));
}

// Distance exceptionality with an exact certificate either way: a unit-sum
// kernel vector of D when exceptional, or a solution of D y = 1 when not.
struct DxCertificate {
    bool dx;
    RatVector witness;
};

inline DxCertificate is_distance_exceptional(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    RatMatrix d = to_rat_matrix(dm);
    RatVector ones(dm.n, Rat(1));
    std::optional<RatVector> y = solve(d, ones);
    if (y) return {false, std::move(*y)};
    // D x = 1 inconsistent <=> the kernel contains a vector with nonzero sum.
    for (RatVector& v : kernel_basis(d)) {
        Rat s = vec_sum(v);
        if (s != 0) {
            for (Rat& e : v) e /= s;
            return {true, std::move(v)};
        }
    }
    throw std::logic_error("inconsistent D x = 1 without a nonzero-sum kernel vector");
}

// Distance matrix of the cone g + K_1 restricted to V(g): entries min(d, 2)
// within a component, 2 across components. Defined for disconnected graphs.
inline DistanceMatrix cone_distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(n, std::vector<int>(n, 2));
    for (int u = 0; u < n; ++u) {
        std::vector<int> bd = bfs_distances(g, u);
        for (int v = 0; v < n; ++v)
            if (bd[v] >= 0 && bd[v] < 2) dm.d[u][v] = bd[v];
    }
    return dm;
}

inline IndexValue modified_index(const Graph& g) {
    return solve_affine_index(to_rat_matrix(cone_distance_matrix(g))).index;
}

// kappa = D^+ (n 1), the minimum-norm solution; nullopt iff g is distance
// exceptional.
inline std::optional<RatVector> steinerberger_curvature(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    RatVector rhs(dm.n, Rat(dm.n));
    return min_norm_solve(to_rat_matrix(dm), rhs);
}

// iota = n / (1^T kappa), infinite when the curvature has zero mean.
inline IndexValue index_via_pseudoinverse(const Graph& g) {
    std::optional<RatVector> kappa = steinerberger_curvature(g);
    if (!kappa) throw DistanceExceptional("index_via_pseudoinverse on a distance exceptional graph");
    Rat s = vec_sum(*kappa);
    if (s == 0) return IndexValue::infinite();
    return IndexValue::finite(Rat(g.vertex_count()) / s);
}

inline long long wiener_index(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    long long total = 0;
    for (const auto& row : dm.d)
        for (int x : row) total += x;
    return total / 2;
}

// ---- closed-form family indices ----

inline IndexValue tree_index(int n) {
    if (n < 1) throw InvalidParameter("tree index needs n >= 1");
    return IndexValue::finite(Rat(n - 1) / 2);
}

inline IndexValue cycle_index(int n) {
    if (n < 3) throw InvalidParameter("cycle index needs n >= 3");
    if (n % 2 == 0) return IndexValue::finite(Rat(n) / 4);
    return IndexValue::finite(Rat(BigInt(n) * n - 1) / (4 * BigInt(n)));
}

inline IndexValue torus_index(int n, int d) {
    if (d < 1) throw InvalidParameter("torus index needs d >= 1");
    return IndexValue::finite(Rat(d) * cycle_index(n).value());
}

inline IndexValue cube_index(int d) {
    if (d < 1) throw InvalidParameter("cube index needs d >= 1");
    return IndexValue::finite(Rat(d) / 2);
}

inline IndexValue lattice_index(int n, int m) {
    if (n < 1 || m < 1) throw InvalidParameter("lattice index needs n, m >= 1");
    return IndexValue::finite(Rat(n + m - 2) / 2);
}

inline IndexValue complete_index(int n) {
    if (n < 1) throw InvalidParameter("complete index needs n >= 1");
    return IndexValue::finite(Rat(n - 1) / n);
}

// 1 + (sum a_i/(a_i-2))^-1, with the part-of-size-2 and zero-sum special
// cases.
inline IndexValue multipartite_index(const std::vector<int>& parts) {
    if (parts.size() < 2) throw InvalidParameter("multipartite index needs k >= 2 parts");
    bool has_two = false;
    for (int a : parts) {
        if (a < 1) throw InvalidParameter("multipartite part sizes must be >= 1");
        if (a == 2) has_two = true;
    }
    if (has_two) return IndexValue::finite(1);
    Rat s = 0;
    for (int a : parts) s += Rat(a) / (a - 2);
    if (s == 0) return IndexValue::infinite();
    return IndexValue::finite(1 + 1 / s);
}

inline IndexValue basket_index(int k) {
    if (k < 3) throw InvalidParameter("basket index needs k >= 3");
    BigInt pow3 = boost::multiprecision::pow(BigInt(3), unsigned(k));
    if (k % 2 != 0) pow3 = -pow3;
    return IndexValue::finite(Rat(pow3 + 4 * k - 1) / 8);
}

// 2W/n^2 for graphs whose distance-matrix row sums all agree (distance
// regular graphs in particular).
inline IndexValue transmission_regular_index(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    long long row0 = 0;
    for (int x : dm.d[0]) row0 += x;
    for (int i = 1; i < dm.n; ++i) {
        long long row = 0;
        for (int x : dm.d[i]) row += x;
        if (row != row0) throw InvalidParameter("graph is not transmission regular");
    }
    return IndexValue::finite(Rat(row0) / dm.n);
}

// ---- composition-law predictions (pure arithmetic on index values) ----

inline IndexValue predict_product(const IndexValue& a, const IndexValue& b) { return a + b; }
inline IndexValue predict_coalesce(const IndexValue& a, const IndexValue& b) { return a + b; }

// The six-branch join law; inputs are modified indices of the two parts.
inline IndexValue predict_join(const IndexValue& mg, const IndexValue& mh) {
    if (mg.is_infinite() && mh.is_infinite()) return IndexValue::infinite();
    if (mg.is_infinite()) return mh;
    if (mh.is_infinite()) return mg;
    const Rat& a = mg.value();
    const Rat& b = mh.value();
    if (a == 1 && b == 1) return IndexValue::finite(1);
    if (a + b == 2) return IndexValue::infinite();
    return IndexValue::finite((a * b - 1) / (a + b - 2));
}

// Potential update for add_pendant(g, u): subtract 1/2 at u, give the new
// vertex 1/2; the constant rises by exactly 1/2. Re-verified on the new
// graph.
inline Potential pendant_potential_update(const Graph& g, const Potential& p, int u) {
    if (u < 0 || u >= g.vertex_count()) throw VertexOutOfRange("pendant update: u out of range");
    if (int(p.x.size()) != g.vertex_count())
        throw CertificateViolation("potential does not match graph order");
    RatVector x = p.x;
    x[u] -= Rat(1) / 2;
    x.push_back(Rat(1) / 2);
    Graph bigger = add_pendant(g, u);
    Potential updated = bigger.vertex_count() > 1500
                            ? Potential::checked_streaming(bigger, std::move(x))
                            : Potential::checked(distance_matrix(bigger), std::move(x));
    if (updated.constant != p.constant + Rat(1) / 2)
        throw CertificateViolation("pendant update did not raise the constant by 1/2");
    return updated;
}

}  // namespace curvex
