#include "schur/bounds.hpp"

#include <algorithm>
#include <set>

#include "schur/trigraph.hpp"

namespace schur {

void validate_params(const PGroupParams& pp) {
    if (!is_prime(pp.p)) throw InvalidParams("p = " + std::to_string(pp.p) + " is not prime");
    if (pp.delta < 2 || pp.delta > pp.d || pp.d > pp.n)
        throw InvalidParams("need 2 <= delta <= d <= n");
    if (pp.k < 1 || pp.k > pp.n - pp.d)
        throw InvalidParams("need 1 <= k <= n - d");
    if (pp.kprime < 1 || pp.kprime > std::min(pp.k, binomial(pp.delta, 2)))
        throw InvalidParams("need 1 <= k' <= min(k, C(delta,2))");
}

long long Exponent::effective() const {
    // floor for possibly negative half-integers
    return twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
}

std::string Exponent::str() const {
    if (!is_half()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

long long sum_d_minus_i(long long d, long long from, long long to) {
    long long s = 0;
    for (long long i = from; i <= to; ++i) s += d - i;
    return s;
}

} // namespace

Exponent exp_main(const PGroupParams& pp) {
    validate_params(pp);
    RTDecomposition rt = rt_decompose(binomial(pp.delta, 2) - pp.kprime);
    long long twice = (pp.d - 1) * (pp.n + pp.k) -
                      2 * (pp.k * (pp.d - pp.delta) + binomial(pp.delta, 3) - binomial(rt.r, 3) - binomial(rt.t, 2));
    return {twice};
}

Exponent exp_main_h2(const PGroupParams& pp) {
    Exponent e = exp_main(pp);
    return {e.twice + 2 * pp.d};
}

Exponent exp_comparison_coarse(const PGroupParams& pp) {
    validate_params(pp);
    long long twice = (pp.d - 1) * (pp.n + pp.k) - 2 * sum_d_minus_i(pp.d, 2, std::min(pp.d, pp.kprime + 1));
    return {twice};
}

Exponent exp_comparison_refined(const PGroupParams& pp) {
    validate_params(pp);
    long long twice = (pp.d - 1) * (pp.n + pp.k) -
                      2 * (pp.k * (pp.d - pp.delta) + sum_d_minus_i(pp.delta, 2, std::min(pp.delta, pp.kprime + 1)));
    return {twice};
}

Exponent exp_special_full_rank(long long d) {
    if (d < 3) throw InvalidParams("special-rank bound needs d >= 3");
    return {2 * (d - 1) * d * (d + 1) / 3};
}

Exponent exp_special_shape(Residue p, long long n, long long d, long long k) {
    if (!is_prime(p)) throw InvalidParams("p is not prime");
    if (n != d + k) throw HypothesisViolated("special shape requires n = d + k");
    if (k <= 2) throw HypothesisViolated("requires k > 2");
    if (d <= k + 1) throw HypothesisViolated("requires d > k + 1");
    long long twice = (d - 1) * (n + k) - 2 * (sum_d_minus_i(d, 2, k + 1) + (k - 2));
    return {twice};
}

Exponent exp_special_shape_h2(Residue p, long long n, long long d, long long k) {
    Exponent e = exp_special_shape(p, n, d, k);
    return {e.twice + 2 * d};
}

std::vector<std::pair<Residue, Exponent>> exp_sylow_product(const std::vector<PGroupParams>& parts) {
    std::set<Residue> seen;
    std::vector<std::pair<Residue, Exponent>> out;
    for (const auto& pp : parts) {
        if (!seen.insert(pp.p).second)
            throw DuplicatePrime("prime " + std::to_string(pp.p) + " appears twice");
        out.emplace_back(pp.p, exp_main(pp));
    }
    return out;
}

Exponent exp_chain(const PGroupParams& pp, long long dim_psi_bar) {
    validate_params(pp);
    if (dim_psi_bar < 0) throw InvalidParams("image dimension must be non-negative");
    long long twice = (pp.d - 1) * (pp.n + pp.k) - 2 * (pp.k * (pp.d - pp.delta) + dim_psi_bar);
    return {twice};
}

CompareReport compare_report(const PGroupParams& pp) {
    validate_params(pp);
    CompareReport rep;
    rep.params = pp;

    Exponent main = exp_main(pp);
    Exponent refined = exp_comparison_refined(pp);
    Exponent coarse = exp_comparison_coarse(pp);
    rep.entries.push_back({"main", main, true, ""});
    rep.entries.push_back({"main_h2", exp_main_h2(pp), true, "second cohomology, Z/pZ coefficients"});
    rep.entries.push_back({"comparison_refined", refined, true,
                           pp.delta == pp.kprime + 1 ? "equals the main bound at delta = k'+1" : ""});
    rep.entries.push_back({"comparison_coarse", coarse, true, ""});

    bool special_shape = (pp.n == pp.d + pp.k) && pp.d == pp.delta && pp.k == pp.kprime;
    if (special_shape && pp.k > 2 && pp.d > pp.k + 1)
        rep.entries.push_back({"special_shape", exp_special_shape(pp.p, pp.n, pp.d, pp.k), true, "special-shape improvement"});
    if (special_shape && pp.k == binomial(pp.d, 2) && pp.d >= 3)
        rep.entries.push_back({"special_full_rank", exp_special_full_rank(pp.d), true, "maximal commutator rank"});

    rep.ordering_ok = main <= refined && refined <= coarse;
    if (!rep.ordering_ok)
        throw std::logic_error("bound ordering violated; this should be impossible");
    return rep;
}

bool triangle_sum_identity(long long delta, long long kprime) {
    if (delta <= kprime + 1) throw HypothesisViolated("requires delta > k' + 1");
    RTDecomposition rt = rt_decompose(binomial(delta, 2) - kprime);
    return binomial(delta, 3) - binomial(rt.r, 3) - binomial(rt.t, 2) ==
           sum_d_minus_i(delta, 2, kprime + 1);
}

} // namespace schur
