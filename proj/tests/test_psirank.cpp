#include <doctest.h>

#include <random>

#include "schur/psirank.hpp"
#include "schur/fixtures.hpp"
#include "schur/grouplab.hpp"
#include "schur/trigraph.hpp"
#include "test_helpers.hpp"

using namespace schur;
using namespace schur::testing;

TEST_CASE("matrix shape follows the triple/tensor indexing") {
    AltMap three = construct_sharp_group(3, 3, 3, 3).map;
    PsiMatrix pm = psi_matrix(three);
    CHECK(pm.matrix.rows == 1);
    CHECK(pm.matrix.cols == 9);

    PsiMatrix big = psi_matrix(fixtures::group_d6k4(3));
    CHECK(big.matrix.rows == 20);
    CHECK(big.matrix.cols == 24);
    CHECK(big.triples.front() == IndexTriple{1, 2, 3});

    AltMap tiny(3, 2, 1);
    tiny.set(1, 2, {1});
    CHECK(psi_matrix(tiny).matrix.rows == 0);
    CHECK(dim_im_psi(tiny) == 0);
}

TEST_CASE("image dimensions of the fixtures") {
    AltMap g = fixtures::group_d6k4(3);
    CHECK(dim_im_psi(g) == 12);
    CHECK(dim_im_psi(quotient_by_radical(g).map) == 8);
    CHECK(dim_im_psi(fixtures::special_group_d5k3()) == 8);
}

TEST_CASE("rows agree with the trilinear evaluation on unit vectors") {
    AltMap a = fixtures::demo_map_n5m4();
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                FpVector ei(5, 0), ej(5, 0), ek(5, 0);
                ei[i - 1] = ej[j - 1] = ek[k - 1] = 1;
                CHECK(psi_row(a, i, j, k) == psi_apply(a, ei, ej, ek));
            }
}

TEST_CASE("trilinear map is alternating with signs") {
    AltMap a = random_altmap(5, 5, 4, 31);
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        FpVector x = random_vector(5, 5, rng), y = random_vector(5, 5, rng), z = random_vector(5, 5, rng);
        FpVector xyz = psi_apply(a, x, y, z);
        // odd permutations negate, even ones preserve
        FpVector yxz = psi_apply(a, y, x, z);
        FpVector zxy = psi_apply(a, z, x, y);
        for (std::size_t t = 0; t < xyz.size(); ++t) {
            CHECK(yxz[t] == fp_neg(xyz[t], a.p));
            CHECK(zxy[t] == xyz[t]);
        }
        FpVector xxy = psi_apply(a, x, x, y);
        CHECK(std::all_of(xxy.begin(), xxy.end(), [](Residue v) { return v == 0; }));
    }
}

TEST_CASE("triple collection around a pair set") {
    PairBasis pb = construct_pair_basis(fixtures::demo_map_n5m4());
    std::vector<IndexTriple> w = script_w(pb.pairs, 5);
    std::vector<IndexTriple> want{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                  {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    CHECK(w == want);

    CHECK(script_w({{1, 2}}, 4) == std::vector<IndexTriple>{{1, 2, 3}, {1, 2, 4}});

    // star with three rays on six vertices
    CHECK(script_w({{1, 2}, {1, 3}, {1, 4}}, 6).size() == 9);
}

TEST_CASE("triple count matches the complement triangle count") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Residue p = std::array<Residue, 3>{2, 3, 5}[seed % 3];
        int n = 4 + int(seed % 4);
        int m = 1 + int(seed % 5);
        if (m > n * (n - 1) / 2) m = n * (n - 1) / 2;
        AltMap a = random_altmap(p, n, m, 600 + seed);
        PairBasis pb = construct_pair_basis(a);
        long long tri = count_triangles(complement(graph_of_pairset(pb.pairs, n)));
        CHECK(long(script_w(pb.pairs, n).size()) == binomial(n, 3) - tri);
    }
}

TEST_CASE("image row of one triple, written out") {
    AltMap a = fixtures::demo_map_n5m4();
    PairBasis pb = construct_pair_basis(a);
    std::vector<FpVector> rows = w_vectors(a, pb);
    std::vector<IndexTriple> w = script_w(pb.pairs, 5);
    auto it = std::find(w.begin(), w.end(), IndexTriple{1, 2, 4});
    REQUIRE(it != w.end());
    // A(1,2) (x) e4 + A(2,4) (x) e1: ones at columns v1*e4 = 3 and v3*e1 = 10
    FpVector want(20, 0);
    want[0 * 5 + 3] = 1;
    want[2 * 5 + 0] = 1;
    CHECK(rows[std::size_t(it - w.begin())] == want);
}

TEST_CASE("the dependent row outside the collection") {
    AltMap a = fixtures::demo_map_n5m4();
    FpVector sum = psi_row(a, 1, 2, 4);
    FpVector other = psi_row(a, 1, 3, 4);
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = fp_add(sum[t], other[t], a.p);
    CHECK(sum == psi_row(a, 1, 4, 5));

    PairBasis pb = construct_pair_basis(a);
    auto w = script_w(pb.pairs, 5);
    CHECK(std::find(w.begin(), w.end(), IndexTriple{1, 4, 5}) == w.end());
    // yet the collected rows stay independent
    auto rows = w_vectors(a, pb);
    CHECK(rank(FpMatrix::from_rows(a.p, rows, 20)) == rows.size());
}

TEST_CASE("collecting by value membership instead of pair membership loses independence") {
    AltMap a = fixtures::demo_map_n5m4();
    PairBasis pb = construct_pair_basis(a);
    // triples where some pair VALUE equals an accepted value, not where the
    // pair itself was accepted
    std::vector<IndexTriple> by_value;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                bool hit = false;
                for (IndexPair pr : {IndexPair{i, j}, IndexPair{i, k}, IndexPair{j, k}})
                    for (const FpVector& b : pb.basis)
                        if (a.value(pr.first, pr.second) == b) hit = true;
                if (hit) by_value.push_back({i, j, k});
            }
    CHECK(by_value.size() == 10); // two more than the pair-membership collection
    std::vector<FpVector> rows;
    for (IndexTriple t : by_value) rows.push_back(psi_row(a, t[0], t[1], t[2]));
    CHECK(rank(FpMatrix::from_rows(a.p, rows, 20)) < rows.size());
}

TEST_CASE("hand-picked bases can fail where the greedy one cannot") {
    AltMap a = fixtures::demo_map_n5m5();
    // the pair family {1,2},{1,3},{2,4},{3,5},{4,5} spans V value-wise
    std::vector<IndexPair> hand{{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
    std::vector<FpVector> vals;
    for (auto [i, j] : hand) vals.push_back(a.value(i, j));
    CHECK(rank(FpMatrix::from_rows(a.p, vals, 5)) == 5);
    // but its image rows are dependent
    std::vector<FpVector> rows;
    for (IndexTriple t : script_w(hand, 5)) rows.push_back(psi_row(a, t[0], t[1], t[2]));
    CHECK(rank(FpMatrix::from_rows(a.p, rows, 25)) < rows.size());
    // the scanned pair set has independent rows
    PairBasis pb = construct_pair_basis(a);
    auto good = w_vectors(a, pb);
    CHECK(rank(FpMatrix::from_rows(a.p, good, 25)) == good.size());
}

TEST_CASE("collected rows are independent and bounded by the image dimension") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Residue p = std::array<Residue, 3>{2, 3, 5}[seed % 3];
        int n = 4 + int(seed % 4);               // 4..7
        long long cap = binomial(n, 2);
        int m = 1 + int(seed % 8);
        if (m > cap) m = int(cap);
        AltMap a = random_altmap(p, n, m, 81000 + seed);
        PairBasis pb = construct_pair_basis(a);
        auto w = script_w(pb.pairs, n);
        auto rows = w_vectors(a, pb);
        std::size_t wrank = rank(FpMatrix::from_rows(p, rows, std::size_t(m) * n));
        CHECK(wrank == w.size());

        std::size_t dim = dim_im_psi(a);
        CHECK(lb_estimate(n, m) <= long(w.size()));
        CHECK(w.size() <= dim);
        if (!is_tree_of_height_one(pb.pairs).first) CHECK(lb_nontree(n, m) <= long(w.size()));
    }
}

TEST_CASE("counting lower bounds") {
    CHECK(lb_estimate(5, 4) == 6);
    CHECK(lb_estimate(3, 3) == 1);
    CHECK(lb_estimate(6, 4) == 10);
    CHECK_THROWS_AS(lb_estimate(4, 7), InvalidParams);

    CHECK(lb_nontree(5, 4) == 8);
    CHECK(lb_nontree(6, 3) == 10);
    for (int m = 3; m <= 8; ++m) // closed form at the minimal n
        CHECK(lb_nontree(m + 2, m) == m * (m + 1) / 2 + (m - 2));

    CHECK(lb_special_shape(5, 3) == 7);
    CHECK(lb_special_shape(6, 3) == 10);
    CHECK_THROWS_AS(lb_special_shape(5, 4), HypothesisViolated);
    CHECK_THROWS_AS(lb_special_shape(9, 2), HypothesisViolated);
}

TEST_CASE("nontree bound is attained by the demo map") {
    AltMap a = fixtures::demo_map_n5m4();
    PairBasis pb = construct_pair_basis(a);
    CHECK_FALSE(is_tree_of_height_one(pb.pairs).first);
    CHECK(long(script_w(pb.pairs, 5).size()) == lb_nontree(5, 4));
}
