#include <doctest.h>

#include <random>

#include "schur/grouplab.hpp"
#include "schur/fixtures.hpp"
#include "schur/psirank.hpp"
#include "schur/trigraph.hpp"

using namespace schur;

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(make_class_two_group(random_altmap(2, 4, 2, 3)), InvalidParams); // p = 2
    CHECK_THROWS_AS(make_class_two_group(AltMap(3, 4, 0)), InvalidParams);           // abelian
    AltMap bad(3, 4, 2);
    bad.set(1, 2, {1, 0});
    CHECK_THROWS_AS(make_class_two_group(bad), ImageDoesNotSpan);
}

TEST_CASE("invariants of the fixtures") {
    GroupInvariants g = invariants(make_class_two_group(fixtures::group_d6k4(3)));
    CHECK(g.p == 3);
    CHECK(g.n == 10);
    CHECK(g.d == 6);
    CHECK(g.delta == 5);
    CHECK(g.k == 4);
    CHECK(g.kprime == 4);

    GroupInvariants sp = invariants(make_class_two_group(fixtures::special_group_d5k3()));
    CHECK(sp.n == 8);
    CHECK(sp.d == 5);
    CHECK(sp.delta == 5);
    CHECK(sp.k == 3);

    GroupInvariants h = invariants(construct_sharp_group(3, 3, 3, 3));
    CHECK(h.n == 6);
    CHECK(h.d == 3);
    CHECK(h.delta == 3);
    CHECK(h.k == 3);
}

TEST_CASE("exact multiplier and cohomology exponents") {
    ClassTwoGroup g = make_class_two_group(fixtures::group_d6k4(3));
    CHECK(schur_exponent_exact(g) == 23);
    CHECK(h2_exponent(g) == 29);

    ClassTwoGroup sp = make_class_two_group(fixtures::special_group_d5k3());
    CHECK(schur_exponent_exact(sp) == 14);
    CHECK(h2_exponent(sp) == 19);

    ClassTwoGroup heis = construct_sharp_group(3, 2, 2, 1);
    CHECK(schur_exponent_exact(heis) == 2);
    CHECK(h2_exponent(heis) == 4);
}

TEST_CASE("the sharp construction hits its own bound") {
    ClassTwoGroup g = construct_sharp_group(3, 3, 3, 3);
    CHECK(schur_exponent_exact(g) == 8);

    ClassTwoGroup w = construct_sharp_group(3, 6, 6, 11);
    CHECK(w.map.table.size() == 11);
    CHECK_FALSE(w.map.table.count({3, 6})); // killed pairs
    CHECK_FALSE(w.map.table.count({4, 5}));
    CHECK_FALSE(w.map.table.count({4, 6}));
    CHECK_FALSE(w.map.table.count({5, 6}));
    GroupInvariants inv = invariants(w);
    CHECK(inv.n == 17);
    CHECK(inv.delta == 6);
    long long exact = schur_exponent_exact(w);
    CHECK(exact == exp_main(inv.params()).effective());
    CHECK(exact == 51);
}

TEST_CASE("infeasible construction parameters") {
    CHECK_THROWS_AS(construct_sharp_group(3, 5, 4, 2), InfeasibleParameters);  // k < delta - 1
    CHECK_THROWS_AS(construct_sharp_group(3, 5, 4, 7), InfeasibleParameters);  // k > C(delta,2)
    CHECK_THROWS_AS(construct_sharp_group(3, 3, 4, 4), InfeasibleParameters);  // d < delta
    CHECK_THROWS_AS(construct_sharp_group(2, 4, 4, 4), InfeasibleParameters);  // p = 2
}

TEST_CASE("sharpness sweep, small corner") {
    for (Residue p : {3u, 5u})
        for (int delta = 2; delta <= 4; ++delta)
            for (int k = delta - 1; k <= delta * (delta - 1) / 2; ++k)
                for (int a = 0; a <= 2; ++a) {
                    ClassTwoGroup g = construct_sharp_group(p, delta + a, delta, k);
                    GroupInvariants inv = invariants(g);
                    CHECK(inv.delta == delta);
                    CHECK(inv.d == delta + a);
                    long long exact = schur_exponent_exact(g);
                    CHECK(exact == exp_main(inv.params()).effective());
                    // closed form: C(delta,2)+delta*k-k-C(delta,3)+C(r,3)+C(t,2)+C(a,2)+delta*a
                    RTDecomposition rt = rt_decompose(binomial(delta, 2) - k);
                    long long closed = binomial(delta, 2) + delta * k - k - binomial(delta, 3) +
                                       binomial(rt.r, 3) + binomial(rt.t, 2) + binomial(a, 2) + delta * a;
                    CHECK(exact == closed);
                }
}

TEST_CASE("sharpness spot checks beyond the sweep grid") {
    for (auto [p, d, delta, k] : {std::array<int, 4>{3, 7, 7, 15}, {5, 9, 7, 12}, {3, 8, 8, 28}}) {
        ClassTwoGroup g = construct_sharp_group(Residue(p), d, delta, k);
        CHECK(schur_exponent_exact(g) == exp_main(invariants(g).params()).effective());
    }
}

TEST_CASE("coprime product multiplier") {
    ClassTwoGroup g3 = make_class_two_group(fixtures::group_d6k4(3));
    ClassTwoGroup h5 = make_class_two_group(fixtures::group_d6k4(5));
    auto prod = multiplier_of_coprime_product({g3, h5});
    REQUIRE(prod.size() == 2);
    CHECK(prod[0] == std::pair<Residue, long long>{3, 23});
    CHECK(prod[1] == std::pair<Residue, long long>{5, 23});

    auto single = multiplier_of_coprime_product({g3});
    CHECK(single[0].second == 23);

    CHECK_THROWS_AS(multiplier_of_coprime_product({g3, g3}), DuplicatePrime);
}

TEST_CASE("capability criterion") {
    CHECK(capability_check(construct_sharp_group(3, 3, 3, 3)) == Capability::Capable);
    CHECK(capability_check(construct_sharp_group(3, 6, 4, 5)) == Capability::Capable);
    CHECK(capability_check(construct_sharp_group(5, 5, 5, 10)) == Capability::Capable);

    // the repeated value vanishes on the radical complement, so this resolves
    CHECK(capability_check(make_class_two_group(fixtures::group_d6k4(3))) == Capability::Capable);

    // a genuinely repeated commutator on a radical-free map stays undecided
    AltMap rep(3, 4, 2);
    rep.set(1, 2, {1, 0});
    rep.set(3, 4, {1, 0});
    rep.set(1, 3, {0, 1});
    CHECK(radical(rep).empty());
    CHECK(capability_check(make_class_two_group(rep)) == Capability::Unknown);
}

TEST_CASE("soundness of the exact value against every bound") {
    std::mt19937_64 rng(2025);
    for (int it = 0; it < 30; ++it) {
        Residue p = (it % 2) ? 3 : 5;
        int n = 3 + int(rng() % 4);
        int mmax = int(std::min<long long>(binomial(n, 2), 6));
        int m = 1 + int(rng() % mmax);
        ClassTwoGroup g = make_class_two_group(random_altmap(p, n, m, rng()));
        GroupInvariants inv = invariants(g);
        CHECK(inv.n == inv.d + inv.k);
        long long exact = schur_exponent_exact(g);
        CHECK(exact <= exp_main(inv.params()).effective());
        CHECK(exact <= exp_comparison_refined(inv.params()).effective());
        CHECK(exact <= exp_comparison_coarse(inv.params()).effective());
        long long psi_bar = long(dim_im_psi(quotient_by_radical(g.map).map));
        CHECK(exact <= exp_chain(inv.params(), psi_bar).effective());
        // the two image dimensions interlock
        CHECK(long(dim_im_psi(g.map)) >= inv.k * (inv.d - inv.delta) + psi_bar);
    }
}

TEST_CASE("image dimensions interlock with equality on the d6k4 fixture") {
    AltMap a = fixtures::group_d6k4(3);
    CHECK(dim_im_psi(a) == 4 * 1 + dim_im_psi(quotient_by_radical(a).map));
}

TEST_CASE("presentation text round-trips") {
    ClassTwoGroup g = make_class_two_group(fixtures::group_d6k4(3));
    std::string text = to_presentation(g);
    CHECK(text.find("[g1,g2] = q1") != std::string::npos);
    CHECK(text.find("[g1,g6] = q1") != std::string::npos);
    CHECK(text.find("g6^3") != std::string::npos);
    CHECK(parse_presentation(text).map == g.map);

    ClassTwoGroup heis = construct_sharp_group(3, 2, 2, 1);
    std::string ht = to_presentation(heis);
    CHECK(ht.find("g2") != std::string::npos);
    CHECK(ht.find("q1") != std::string::npos);
    CHECK(parse_presentation(ht).map == heis.map);

    std::mt19937_64 rng(31337);
    for (int it = 0; it < 10; ++it) {
        Residue p = (it % 2) ? 3 : 7;
        ClassTwoGroup r = make_class_two_group(random_altmap(p, 5, 3, rng()));
        CHECK(parse_presentation(to_presentation(r)).map == r.map);
    }

    CHECK_THROWS_AS(parse_presentation("no bar here"), MalformedDocument);
}
