#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvex/graph.hpp"
#include "helpers.hpp"

using namespace curvex;
using curvex_test::random_connected_graph;

TEST_CASE("distance matrix of P_3 and K_4") {
    DistanceMatrix p3 = distance_matrix(path_graph(3));
    CHECK(p3.d == std::vector<std::vector<int>>{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});

    DistanceMatrix k4 = distance_matrix(complete_graph(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4.d[i][j] == (i == j ? 0 : 1));
}

TEST_CASE("distance matrix of C_5: max entry 2, row sums 6") {
    DistanceMatrix c5 = distance_matrix(cycle_graph(5));
    CHECK(c5.max_entry() == 2);
    for (const auto& row : c5.d) {
        int s = 0;
        for (int x : row) s += x;
        CHECK(s == 6);
    }
}

TEST_CASE("distance matrix rejects disconnected graphs") {
    CHECK_THROWS_AS(distance_matrix(empty_graph(2)), Disconnected);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_graph(2)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(is_connected(join(complete_graph(3), empty_graph(3))));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("family constructors: counts and parameter checks") {
    Graph b3 = basket_graph(3);
    CHECK(b3.vertex_count() == 9);
    CHECK(b3.edge_count() == 11);
    int deg4 = 0;
    for (int v = 0; v < 9; ++v)
        if (b3.degree(v) == 4) ++deg4;
    CHECK(deg4 == 2);

    for (int k = 3; k <= 9; ++k) {
        Graph bk = basket_graph(k);
        CHECK(bk.vertex_count() == 4 * k - 3);
        CHECK(bk.edge_count() == 4 * k - 1);
    }
    CHECK_THROWS_AS(basket_graph(2), InvalidParameter);
    CHECK_THROWS_AS(basket_graph(1), InvalidParameter);

    Graph k116 = complete_multipartite({1, 1, 6});
    CHECK(k116.vertex_count() == 8);
    CHECK(k116.edge_count() == 13);

    CHECK(hypercube_graph(2).edge_count() == 4);  // C_4
    CHECK(hypercube_graph(2).vertex_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(hypercube_graph(2).degree(v) == 2);

    CHECK_THROWS_AS(cycle_graph(2), InvalidParameter);
    CHECK_THROWS_AS(path_graph(0), InvalidParameter);
    CHECK_THROWS_AS(complete_multipartite({}), InvalidParameter);
    CHECK_THROWS_AS(torus_graph(2, 2), InvalidParameter);
}

TEST_CASE("cartesian product: K_2 x K_2 is a 4-cycle, P_2 x P_3 is a ladder") {
    Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph ladder = cartesian_product(path_graph(2), path_graph(3));
    CHECK(ladder.vertex_count() == 6);
    CHECK(ladder.edge_count() == 7);
}

TEST_CASE("cartesian product metric adds coordinatewise") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_connected_graph(rng, 3 + int(rng() % 4));
        Graph h = random_connected_graph(rng, 3 + int(rng() % 4));
        DistanceMatrix dg = distance_matrix(g), dh = distance_matrix(h);
        DistanceMatrix dp = distance_matrix(cartesian_product(g, h));
        int nh = h.vertex_count();
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < nh; ++v)
                for (int u2 = 0; u2 < g.vertex_count(); ++u2)
                    for (int v2 = 0; v2 < nh; ++v2)
                        CHECK(dp.d[u * nh + v][u2 * nh + v2] == dg.d[u][u2] + dh.d[v][v2]);
    }
}

TEST_CASE("join basics") {
    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    Graph j = join(complete_graph(3), empty_graph(3));
    CHECK(j.vertex_count() == 6);
    CHECK(j.edge_count() == 12);
    Graph kab = join(empty_graph(2), empty_graph(3));
    CHECK(kab == complete_multipartite({2, 3}));
}

TEST_CASE("join metric: diameter <= 2 and min(D, 2J) on the left block") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_connected_graph(rng, 4 + int(rng() % 4));
        Graph h = random_connected_graph(rng, 2 + int(rng() % 4));
        Graph jj = join(g, h);
        DistanceMatrix dj = distance_matrix(jj);
        CHECK(dj.max_entry() <= 2);
        DistanceMatrix dg = distance_matrix(g);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(dj.d[u][v] == std::min(dg.d[u][v], 2));
    }
}

TEST_CASE("coalesce: K_2 o K_2 is P_3, degrees add at the merge vertex") {
    Graph p3 = coalesce(complete_graph(2), 0, complete_graph(2), 0);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 2);  // merged vertex first

    std::mt19937_64 rng(13);
    Graph g = random_connected_graph(rng, 5);
    Graph h = random_connected_graph(rng, 4);
    int u = 2, v = 3;
    Graph gh = coalesce(g, u, h, v);
    CHECK(gh.vertex_count() == 8);
    CHECK(gh.degree(0) == g.degree(u) + h.degree(v));
    CHECK_THROWS_AS(coalesce(g, 9, h, 0), VertexOutOfRange);
}

TEST_CASE("coalesce cross metric: d(x,y) = d_g(x,u) + d_h(v,y)") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 5; ++trial) {
        int ng = 3 + int(rng() % 4), nh = 3 + int(rng() % 4);
        Graph g = random_connected_graph(rng, ng);
        Graph h = random_connected_graph(rng, nh);
        int u = int(rng() % ng), v = int(rng() % nh);
        Graph gh = coalesce(g, u, h, v);
        DistanceMatrix d = distance_matrix(gh);
        DistanceMatrix dg = distance_matrix(g), dh = distance_matrix(h);
        auto pos_g = [&](int a) { return a == u ? 0 : 1 + (a < u ? a : a - 1); };
        auto pos_h = [&](int b) { return b == v ? 0 : ng + (b < v ? b : b - 1); };
        for (int a = 0; a < ng; ++a)
            if (a != u)
                for (int b = 0; b < nh; ++b)
                    if (b != v) CHECK(d.d[pos_g(a)][pos_h(b)] == dg.d[a][u] + dh.d[v][b]);
    }
}

TEST_CASE("add_pendant basics and coalesce equivalence") {
    CHECK(add_pendant(Graph(1), 0) == complete_graph(2));
    CHECK(add_pendant(path_graph(2), 1) == path_graph(3));
    // pendant at u equals coalescing a K_2 at u, up to the vertex relabeling
    Graph g = cycle_graph(4);
    Graph a = add_pendant(g, 2);
    Graph b = coalesce(g, 2, complete_graph(2), 0);
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.edge_count() == b.edge_count());
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
    CHECK_THROWS_AS(add_pendant(g, 4), VertexOutOfRange);
}

TEST_CASE("random distance matrices are metric") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = random_connected_graph(rng, n);
        DistanceMatrix dm = distance_matrix(g);
        for (int i = 0; i < n; ++i) {
            CHECK(dm.d[i][i] == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(dm.d[i][j] == dm.d[j][i]);
                if (i != j) CHECK(dm.d[i][j] >= 1);
                for (int k = 0; k < n; ++k)
                    CHECK(dm.d[i][j] <= dm.d[i][k] + dm.d[k][j]);
            }
        }
    }
}

TEST_CASE("dot emission lists all vertices and edges") {
    std::string dot = to_dot(path_graph(3));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("2;") != std::string::npos);
}
