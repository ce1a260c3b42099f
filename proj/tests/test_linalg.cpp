#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvex/graph.hpp"
#include "curvex/graph6.hpp"
#include "curvex/index.hpp"
#include "curvex/linalg.hpp"

using namespace curvex;

namespace {

// One of the two 7-vertex distance exceptional graphs (it is K_{1,1,1,4}).
const char* kDx7 = "FF~ww";

RatMatrix dist_rat(const Graph& g) { return to_rat_matrix(distance_matrix(g)); }

}  // namespace

TEST_CASE("solve: identity system") {
    RatMatrix a = RatMatrix::identity(3);
    RatVector b{Rat(1), Rat(2), Rat(3)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("solve: K_3 distance system, substituted back") {
    RatMatrix d = dist_rat(complete_graph(3));
    RatVector ones(3, Rat(1));
    auto x = solve(d, ones);
    REQUIRE(x.has_value());
    CHECK(mat_vec(d, *x) == ones);
}

TEST_CASE("solve: distance system of a 7-vertex DX graph is inconsistent") {
    RatMatrix d = dist_rat(parse_graph6(kDx7));
    RatVector ones(7, Rat(1));
    CHECK_FALSE(solve(d, ones).has_value());
}

TEST_CASE("solve: dimension mismatch") {
    CHECK_THROWS_AS(solve(RatMatrix::identity(3), RatVector(4, Rat(1))), DimensionMismatch);
}

TEST_CASE("kernel_basis: identity and zero matrices") {
    CHECK(kernel_basis(RatMatrix::identity(4)).empty());
    RatMatrix zero(2, 2);
    CHECK(kernel_basis(zero).size() == 2);
}

TEST_CASE("kernel_basis: DX distance matrices contain a nonzero-sum vector") {
    for (const char* g6 : {"FF~ww", "F~~v_"}) {
        RatMatrix d = dist_rat(parse_graph6(g6));
        auto basis = kernel_basis(d);
        REQUIRE_FALSE(basis.empty());
        bool nonzero_sum = false;
        for (const auto& v : basis) {
            RatVector out = mat_vec(d, v);
            for (const Rat& e : out) CHECK(e == 0);
            if (vec_sum(v) != 0) nonzero_sum = true;
        }
        CHECK(nonzero_sum);
    }
}

TEST_CASE("kernel_basis vectors are linearly independent") {
    // 3x5 rank-2 matrix: kernel has dimension 3.
    RatMatrix a(3, 5);
    for (int j = 0; j < 5; ++j) {
        a(0, j) = j + 1;
        a(1, j) = 2 * (j + 1);
        a(2, j) = Rat(j) / 3;
    }
    auto basis = kernel_basis(a);
    REQUIRE(basis.size() == 3);
    RatMatrix stacked(int(basis.size()), 5);
    for (int i = 0; i < int(basis.size()); ++i)
        for (int j = 0; j < 5; ++j) stacked(i, j) = basis[i][j];
    CHECK(rank(stacked) == 3);
}

TEST_CASE("min_norm_solve: identity returns b, asymmetric rejected") {
    RatVector b{Rat(3), Rat(-1, 2)};
    auto x = min_norm_solve(RatMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    RatMatrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(min_norm_solve(bad, b), NotSymmetric);
}

TEST_CASE("min_norm_solve: Steinerberger curvature of P_3") {
    RatMatrix d = dist_rat(path_graph(3));
    auto kappa = min_norm_solve(d, RatVector(3, Rat(3)));
    REQUIRE(kappa.has_value());
    CHECK(*kappa == RatVector{Rat(3, 2), Rat(0), Rat(3, 2)});
}

TEST_CASE("min_norm_solve: result is orthogonal to the kernel and minimal") {
    RatMatrix d = dist_rat(parse_graph6(kDx7));
    // Pick a consistent rhs: D times an arbitrary vector.
    RatVector seed(7);
    for (int i = 0; i < 7; ++i) seed[i] = Rat(i - 3, 2);
    RatVector b = mat_vec(d, seed);
    auto x = min_norm_solve(d, b);
    REQUIRE(x.has_value());
    auto ker = kernel_basis(d);
    REQUIRE_FALSE(ker.empty());
    Rat norm2 = dot(*x, *x);
    for (const auto& k : ker) {
        CHECK(dot(*x, k) == 0);
        RatVector shifted = *x;
        for (std::size_t t = 0; t < shifted.size(); ++t) shifted[t] += k[t];
        CHECK(dot(shifted, shifted) > norm2);
    }
}

TEST_CASE("solve_affine_index: K_2 has index 1/2 with witness (1/2, 1/2)") {
    auto sol = solve_affine_index(dist_rat(complete_graph(2)));
    CHECK(sol.index == IndexValue::finite(Rat(1, 2)));
    REQUIRE(sol.witness.has_value());
    CHECK(*sol.witness == RatVector{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("solve_affine_index: K_3 + 3K_1 is infinite") {
    Graph g = join(complete_graph(3), empty_graph(3));
    auto sol = solve_affine_index(dist_rat(g));
    CHECK(sol.index.is_infinite());
    CHECK_FALSE(sol.witness.has_value());
}

TEST_CASE("solve_affine_index: DX graph gives 0 with unit-sum kernel witness") {
    RatMatrix d = dist_rat(parse_graph6(kDx7));
    auto sol = solve_affine_index(d);
    CHECK(sol.index == IndexValue::finite(Rat(0)));
    REQUIRE(sol.witness.has_value());
    CHECK(vec_sum(*sol.witness) == 1);
    for (const Rat& e : mat_vec(d, *sol.witness)) CHECK(e == 0);
}

TEST_CASE("solve_affine_index: rejects asymmetric input") {
    RatMatrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(solve_affine_index(bad), NotSymmetric);
}

TEST_CASE("solve_affine_index is invariant under vertex permutation") {
    std::mt19937_64 rng(20240817);
    Graph g = parse_graph6(kDx7);
    RatMatrix d = dist_rat(g);
    auto base = solve_affine_index(d);
    std::vector<int> perm(7);
    for (int i = 0; i < 7; ++i) perm[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        RatMatrix p(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) p(i, j) = d(perm[i], perm[j]);
        CHECK(solve_affine_index(p).index == base.index);
    }
}

TEST_CASE("solve consistency matches rank comparison") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + int(rng() % 4), n = 2 + int(rng() % 4);
        RatMatrix a(m, n);
        RatVector b(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = Rat(int(rng() % 7) - 3, 1 + int(rng() % 3));
            b[i] = Rat(int(rng() % 7) - 3);
        }
        auto x = solve(a, b);
        RatMatrix aug(m, n + 1);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
            aug(i, n) = b[i];
        }
        bool consistent = rank(aug) == rank(a);
        CHECK(x.has_value() == consistent);
        if (x) CHECK(mat_vec(a, *x) == b);
    }
}
