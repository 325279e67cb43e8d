#include <doctest.h>

#include <random>

#include "schur/trigraph.hpp"
#include "schur/greedy.hpp"
#include "schur/fixtures.hpp"

using namespace schur;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.edges.insert({i, j});
    return g;
}

} // namespace

TEST_CASE("graph of a pair set and its complement") {
    PairBasis pb = construct_pair_basis(fixtures::demo_map_n5m4());
    SimpleGraph g = graph_of_pairset(pb.pairs, 5);
    CHECK(g.edges.size() == 4);
    CHECK(complement(g).edges.size() == 6);

    CHECK(complement(graph_of_pairset({}, 4)) == complete(4));
    CHECK(complement(complete(4)).edges.empty());
    CHECK_THROWS_AS(graph_of_pairset({{1, 6}}, 5), IndexOutOfRange);
    CHECK_THROWS_AS(graph_of_pairset({{2, 2}}, 5), IndexOutOfRange);
}

TEST_CASE("triangle counting") {
    CHECK(count_triangles(complete(3)) == 1);
    CHECK(count_triangles(complete(5)) == 10);
    PairBasis pb = construct_pair_basis(fixtures::demo_map_n5m4());
    CHECK(count_triangles(complement(graph_of_pairset(pb.pairs, 5))) == 2);
    CHECK(count_triangles(complete(70)) == binomial(70, 3)); // multi-word masks
}

TEST_CASE("edge counts of a graph and its complement add up") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 10; ++it) {
        int v = 3 + int(rng() % 8);
        SimpleGraph g{v, {}};
        for (int i = 1; i <= v; ++i)
            for (int j = i + 1; j <= v; ++j)
                if (rng() % 2) g.edges.insert({i, j});
        CHECK(long(g.edges.size() + complement(g).edges.size()) == binomial(v, 2));
    }
}

TEST_CASE("rt decomposition") {
    CHECK(rt_decompose(1).r == 2);
    CHECK(rt_decompose(1).t == 0);
    CHECK(rt_decompose(0).r == 1);
    CHECK(rt_decompose(0).t == 0);
    CHECK(rt_decompose(5).r == 3);
    CHECK(rt_decompose(5).t == 2);
    for (long long v = 0; v <= 1'000'000; ++v) {
        RTDecomposition d = rt_decompose(v);
        CHECK(d.r * (d.r - 1) / 2 + d.t == v);
        CHECK(d.t >= 0);
        CHECK(d.t < d.r);
    }
    CHECK_THROWS_AS(rt_decompose(-1), InvalidParams);
}

TEST_CASE("maximum triangle formula on the small cases") {
    CHECK(max_triangles_formula(3) == 1);
    CHECK(max_triangles_formula(10) == 10);
    CHECK(max_triangles_formula(6) == 4);
    CHECK(max_triangles_formula(0) == 0);
}

TEST_CASE("extremal graphs attain the formula") {
    CHECK(extremal_graph(10) == complete(5));
    SimpleGraph g7 = extremal_graph(7); // K_4 plus one pendant edge
    CHECK(g7.vertices == 5);
    CHECK(g7.edges.size() == 7);
    CHECK(count_triangles(g7) == 4);
    CHECK(count_triangles(extremal_graph(8)) == 5);
    for (long long e = 0; e <= 45; ++e) {
        SimpleGraph g = extremal_graph(e);
        CHECK(long(g.edges.size()) == e);
        CHECK(count_triangles(g) == max_triangles_formula(e));
    }
}

TEST_CASE("exhaustive oracle agrees with the formula on small edge counts") {
    CHECK(brute_force_max_triangles(3, 5) == 1);
    CHECK(brute_force_max_triangles(0, 4) == 0);
    for (int e = 0; e <= 8; ++e)
        CHECK(brute_force_max_triangles(e, 7) == max_triangles_formula(e));
}

TEST_CASE("oracle work cap") {
    CHECK_THROWS_AS(brute_force_max_triangles(20, 10), EnumerationTooLarge);
    CHECK_THROWS_AS(brute_force_max_triangles(30, 40), EnumerationTooLarge);
    CHECK_THROWS_AS(brute_force_max_triangles(50, 5), InvalidParams);
}
