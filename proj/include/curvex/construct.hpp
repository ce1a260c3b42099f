#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "curvex/egyptian.hpp"
#include "curvex/errors.hpp"
#include "curvex/graph.hpp"
#include "curvex/graph6.hpp"
#include "curvex/index.hpp"
#include "curvex/trace.hpp"

namespace curvex {

// One of the two distance exceptional graphs on seven vertices (the smallest
// nontrivial ones); used to realize index 0. The enumeration tests re-derive
// it independently.
inline constexpr const char* kStoredDx7 = "FF~ww";

namespace build_detail {

// Witness potential of K_{1,1,m}: by symmetry (a, a, b, ..., b) with
// a = (m-2)/(m-4), b = 1/(4-m); the achieved constant is -2/(m-4).
inline RatVector k11_potential(int m) {
    if (m < 5) throw InvalidParameter("K_{1,1,m} potential needs m >= 5");
    Rat a = Rat(m - 2) / (m - 4);
    Rat b = Rat(1) / (4 - m);
    RatVector x(std::size_t(m) + 2, b);
    x[0] = a;
    x[1] = a;
    return x;
}

inline RatVector p3_potential() { return {Rat(1, 2), Rat(0), Rat(1, 2)}; }

// Potential of G o H at (u, v) from potentials of the factors, laid out as
// coalesce() orders vertices: merged vertex first, getting x_G[u]+x_H[v]-1.
inline RatVector coalesce_potential(const RatVector& xg, int u, const RatVector& xh, int v) {
    RatVector x;
    x.reserve(xg.size() + xh.size() - 1);
    x.push_back(xg[u] + xh[v] - 1);
    for (int i = 0; i < int(xg.size()); ++i)
        if (i != u) x.push_back(xg[i]);
    for (int i = 0; i < int(xh.size()); ++i)
        if (i != v) x.push_back(xh[i]);
    return x;
}

// Kronecker potential of G box H (row-major vertex order).
inline RatVector product_potential(const RatVector& xg, const RatVector& xh) {
    RatVector x;
    x.reserve(xg.size() * xh.size());
    for (const Rat& a : xg)
        for (const Rat& b : xh) x.push_back(a * b);
    return x;
}

inline Potential verify_potential(const Graph& g, RatVector x) {
    return g.vertex_count() > 1500 ? Potential::checked_streaming(g, std::move(x))
                                   : Potential::checked(distance_matrix(g), std::move(x));
}

// Unit-fraction terms for the block constructions. Greedy expansions can
// produce terms quadratic in the running denominator, which makes block
// graphs too large to build, so terms above the cap fall back to the plain
// decomposition p/q = p * (1/q) after the integer part (the constructions
// only need *some* unit-fraction tuple; repeats are fine).
inline std::vector<BigInt> unit_fraction_terms(const Rat& r, long long term_cap = 2000) {
    EgyptianDecomposition greedy = egyptian_fraction(r);
    bool ok = true;
    for (const BigInt& t : greedy.terms)
        if (t > term_cap) ok = false;
    if (ok) return greedy.terms;

    std::vector<BigInt> terms;
    BigInt whole = numerator(r) / denominator(r);
    for (BigInt i = 0; i < whole; ++i) terms.emplace_back(1);
    Rat rem = r - Rat(whole);
    BigInt p = numerator(rem), q = denominator(rem);
    for (BigInt i = 0; i < p; ++i) terms.push_back(q);
    return terms;
}

inline int block_order_for_term(const BigInt& n) {
    BigInt m = 2 * n + 4 + 2;  // |V(K_{1,1,2n+4})|
    if (m > 200000) throw InvalidParameter("unit-fraction term too large to realize as a graph");
    return int(m);
}

}  // namespace build_detail

struct RealizeResult {
    Graph graph;
    ConstructionTrace trace;
    Potential certificate;  // exact proof that the index equals the request
};

// Builds a graph with curvature index exactly q. Negative targets use a
// coalescence chain of K_{1,1,2n+4} blocks; zero returns the stored
// seven-vertex example; positive targets use the product of blocks with
// copies of P_3 when that stays small, otherwise the coalescence chain with
// P_3 blocks (same index arithmetic).
inline RealizeResult realize_rational_index(const Rat& q) {
    using namespace build_detail;

    if (q == 0) {
        Graph g = parse_graph6(kStoredDx7);
        IndexResult res = curvature_index(g);
        ConstructionTrace trace;
        trace.steps.push_back({"start", kStoredDx7, -1, -1, res.index});
        return {g, std::move(trace), std::move(*res.potential)};
    }

    // Assemble the block list: (graph, potential, index) triples.
    struct Block {
        Graph g;
        RatVector x;
        Rat iota;
    };
    std::vector<Block> blocks;
    bool product_route = false;

    if (q < 0) {
        for (const BigInt& t : unit_fraction_terms(-q)) {
            int m = block_order_for_term(t) - 2;
            blocks.push_back({complete_multipartite({1, 1, m}), k11_potential(m),
                              Rat(-2) / (m - 4)});
        }
    } else {
        BigInt m_int = numerator(q) / denominator(q) + 1;  // smallest integer > q
        Rat r = Rat(m_int) - q;
        for (const BigInt& t : unit_fraction_terms(r)) {
            int m = block_order_for_term(t) - 2;
            blocks.push_back({complete_multipartite({1, 1, m}), k11_potential(m),
                              Rat(-2) / (m - 4)});
        }
        // Try the product form first: blocks boxed together, then m copies
        // of P_3.
        BigInt product_size = 1;
        for (const Block& b : blocks) product_size *= b.g.vertex_count();
        for (BigInt i = 0; i < m_int && product_size <= 600; ++i) product_size *= 3;
        product_route = product_size <= 600;
        for (BigInt i = 0; i < m_int; ++i)
            blocks.push_back({path_graph(3), p3_potential(), Rat(1)});
    }

    Graph cur = blocks.front().g;
    RatVector x = blocks.front().x;
    Rat iota = blocks.front().iota;
    ConstructionTrace trace;
    trace.steps.push_back(
        {"start", serialize_graph6(cur), -1, -1, IndexValue::finite(iota)});

    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        iota += b.iota;
        if (product_route) {
            cur = cartesian_product(cur, b.g);
            x = product_potential(x, b.x);
            trace.steps.push_back(
                {"product", serialize_graph6(b.g), -1, -1, IndexValue::finite(iota)});
        } else {
            cur = coalesce(cur, 0, b.g, 0);
            x = coalesce_potential(x, 0, b.x, 0);
            trace.steps.push_back(
                {"coalesce", serialize_graph6(b.g), 0, 0, IndexValue::finite(iota)});
        }
    }

    Potential cert = verify_potential(cur, std::move(x));
    if (cert.constant != q)
        throw std::logic_error("realized index does not match the request");
    return {std::move(cur), std::move(trace), std::move(cert)};
}

// ---- basket machinery ----

struct BasketPotential {
    int k;
    RatVector x;
    Rat iota;  // ((-3)^k + 4k - 1) / 8
};

// The closed-form witness on the basket graph: entries
// a^(m)_i = ((-3)^(i-1) + (-3)^(m-i)) / 2 stacked over the path partition
// (the P_k block first, then the three P_{k+1} interiors).
inline BasketPotential basket_potential(int k) {
    if (k < 3) throw InvalidParameter("basket potential needs k >= 3");
    auto a = [](int m) {
        RatVector v(m);
        for (int i = 1; i <= m; ++i) {
            BigInt p1 = boost::multiprecision::pow(BigInt(-3), unsigned(i - 1));
            BigInt p2 = boost::multiprecision::pow(BigInt(-3), unsigned(m - i));
            v[i - 1] = Rat(p1 + p2) / 2;
        }
        return v;
    };
    RatVector x = a(k);
    RatVector tail = a(k - 1);
    for (int copy = 0; copy < 3; ++copy) x.insert(x.end(), tail.begin(), tail.end());

    Potential cert = Potential::checked(distance_matrix(basket_graph(k)), std::move(x));
    if (IndexValue::finite(cert.constant) != basket_index(k))
        throw std::logic_error("basket potential constant disagrees with the closed form");
    return {k, std::move(cert.x), std::move(cert.constant)};
}

struct JailbreakResult {
    Graph graph;
    Potential certificate;  // constant 0: a unit-sum kernel vector
    ConstructionTrace trace;
    std::vector<int> placements;
};

namespace build_detail {

inline JailbreakResult jailbreak_run(int j, const std::vector<int>* fixed,
                                     std::mt19937_64* rng) {
    if (j < 1) throw InvalidParameter("basket jailbreak needs j >= 1");
    const int k = 2 * j + 1;
    BasketPotential bp = basket_potential(k);
    // s is negative for odd k; 2|s| pendant additions raise it to exactly 0.
    BigInt steps_big = -2 * numerator(bp.iota);
    if (fixed && BigInt(fixed->size()) != steps_big)
        throw PlacementLengthMismatch("expected " + steps_big.str() + " placements, got " +
                                      std::to_string(fixed->size()));
    const long long steps = steps_big.convert_to<long long>();

    Graph g = basket_graph(k);
    Potential pot = Potential::checked(distance_matrix(g), bp.x);
    ConstructionTrace trace;
    trace.steps.push_back(
        {"start", serialize_graph6(g), -1, -1, IndexValue::finite(bp.iota)});
    std::vector<int> placements;
    for (long long i = 0; i < steps; ++i) {
        int u = fixed ? (*fixed)[std::size_t(i)]
                      : int((*rng)() % std::uint64_t(g.vertex_count()));
        pot = pendant_potential_update(g, pot, u);
        g = add_pendant(g, u);
        placements.push_back(u);
        trace.steps.push_back({"pendant", "", u, -1, IndexValue::finite(pot.constant)});
    }
    if (pot.constant != 0) throw std::logic_error("jailbreak did not land on index zero");
    return {std::move(g), std::move(pot), std::move(trace), std::move(placements)};
}

}  // namespace build_detail

inline JailbreakResult basket_jailbreak(int j, const std::vector<int>& placements) {
    return build_detail::jailbreak_run(j, &placements, nullptr);
}

inline JailbreakResult basket_jailbreak(int j, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return build_detail::jailbreak_run(j, nullptr, &rng);
}

// ---- the embedding algorithm ----

enum class MergePolicy { FirstVertex, LastVertex, Random };

struct EmbedResult {
    Graph graph;
    ConstructionTrace trace;
    std::vector<int> map;   // where the input's vertices ended up
    Potential certificate;  // constant 0
};

// Iterative embedding of an arbitrary graph into a distance exceptional one:
// join with 2K_1 when disconnected or of infinite index (which always lands
// on index 1), raise negative index to nonnegative by K_2 merges (+1/2
// each), then cancel the remaining positive index with K_{1,1,2n+4} merges.
inline EmbedResult algorithm1_embed(const Graph& g, MergePolicy policy = MergePolicy::FirstVertex,
                                    std::uint64_t seed = 0) {
    using namespace build_detail;
    std::mt19937_64 rng(seed);

    std::vector<int> map(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) map[i] = i;

    Graph cur = g;
    RatVector x;
    Rat iota;
    ConstructionTrace trace;

    bool needs_join = !is_connected(g);
    std::optional<IndexResult> base;
    if (!needs_join) {
        base = curvature_index(g);
        needs_join = base->index.is_infinite();
    }
    if (needs_join) {
        trace.steps.push_back({"start", serialize_graph6(g), -1, -1, IndexValue::infinite()});
        cur = join(g, empty_graph(2));
        // Unit-sum vector supported on the two new vertices: every row of
        // the joined distance matrix sums it to 1, whatever g was.
        x.assign(std::size_t(cur.vertex_count()), Rat(0));
        x[std::size_t(cur.vertex_count()) - 2] = Rat(1, 2);
        x[std::size_t(cur.vertex_count()) - 1] = Rat(1, 2);
        iota = 1;
        trace.steps.push_back(
            {"join", serialize_graph6(empty_graph(2)), -1, -1, IndexValue::finite(1)});
    } else {
        x = base->potential->x;
        iota = base->index.value();
        trace.steps.push_back({"start", serialize_graph6(g), -1, -1, base->index});
    }

    auto pick_vertex = [&](const Graph& host) -> int {
        switch (policy) {
            case MergePolicy::FirstVertex: return 0;
            case MergePolicy::LastVertex: return host.vertex_count() - 1;
            case MergePolicy::Random: return int(rng() % std::uint64_t(host.vertex_count()));
        }
        return 0;
    };
    auto apply_merge = [&](const Graph& block, const RatVector& bx, const Rat& biota,
                           const std::string& g6) {
        int u = pick_vertex(cur);
        x = coalesce_potential(x, u, bx, 0);
        cur = coalesce(cur, u, block, 0);
        for (int& pos : map) pos = pos == u ? 0 : (pos < u ? pos + 1 : pos);
        iota += biota;
        trace.steps.push_back({"coalesce", g6, u, 0, IndexValue::finite(iota)});
    };

    while (iota < 0) apply_merge(complete_graph(2), {Rat(1, 2), Rat(1, 2)}, Rat(1, 2), "A_");

    if (iota > 0) {
        for (const BigInt& t : unit_fraction_terms(iota)) {
            int m = block_order_for_term(t) - 2;
            apply_merge(complete_multipartite({1, 1, m}), k11_potential(m), Rat(-2) / (m - 4),
                        serialize_graph6(complete_multipartite({1, 1, m})));
        }
    }

    Potential cert = verify_potential(cur, std::move(x));
    if (cert.constant != 0) throw std::logic_error("embedding did not land on index zero");
    return {std::move(cur), std::move(trace), std::move(map), std::move(cert)};
}

}  // namespace curvex
