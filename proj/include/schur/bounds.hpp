#ifndef SCHUR_BOUNDS_HPP
#define SCHUR_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schur/errors.hpp"
#include "schur/fieldmat.hpp"

namespace schur {

/// Parameters a bound formula consumes: group order p^n, d = d(G),
/// delta = d(G/Z), |gamma_2 G| = p^k, kprime = d(gamma_2 G / gamma_3 G).
struct PGroupParams {
    Residue p = 3;
    long long n = 0;
    long long d = 0;
    long long delta = 0;
    long long k = 0;
    long long kprime = 0;
};

/// Rejects parameter tuples no group can have: requires p prime,
/// 2 <= delta <= d <= n, 1 <= k <= n - d, 1 <= kprime <= min(k, C(delta,2)).
void validate_params(const PGroupParams& pp);

/// Bound exponent; the exact value may be half-integral (the (d-1)(n+k)/2
/// term), while the usable bound on an integral power of p is the floor.
struct Exponent {
    long long twice = 0; // 2 * exact value

    long long effective() const; // floor
    bool is_half() const { return twice % 2 != 0; }
    std::string str() const;
    auto operator<=>(const Exponent&) const = default;
};

/// The main multiplier bound: (d-1)(n+k)/2 - k(d-delta) - C(delta,3)
/// + C(r,3) + C(t,2), with (r,t) decomposing C(delta,2) - k'.
Exponent exp_main(const PGroupParams& pp);
/// exp_main + d, bounding H^2 with Z/pZ coefficients.
Exponent exp_main_h2(const PGroupParams& pp);
/// Earlier bounds the main one is measured against: the coarse variant
/// subtracts sum_{i=2..min(d,k'+1)}(d-i), the refined one additionally
/// uses the central quotient rank delta. Never smaller than exp_main.
Exponent exp_comparison_coarse(const PGroupParams& pp);
Exponent exp_comparison_refined(const PGroupParams& pp);

/// (d-1)d(d+1)/3 for special groups of maximal commutator rank; d >= 3.
Exponent exp_special_full_rank(long long d);

/// Special-shape improvement; requires n = d + k, d > k + 1, k > 2.
Exponent exp_special_shape(Residue p, long long n, long long d, long long k);
Exponent exp_special_shape_h2(Residue p, long long n, long long d, long long k);

std::vector<std::pair<Residue, Exponent>> exp_sylow_product(const std::vector<PGroupParams>& parts);

/// (d-1)(n+k)/2 - k(d-delta) - dim_psi_bar: what remains of the product
/// inequality once an image dimension for the induced trilinear map on the
/// central quotient is known.
Exponent exp_chain(const PGroupParams& pp, long long dim_psi_bar);

struct CompareEntry {
    std::string name;
    Exponent exponent;
    bool applicable = true;
    std::string note;
};

struct CompareReport {
    PGroupParams params;
    std::vector<CompareEntry> entries; // main bound first, then the comparisons
    bool ordering_ok = false;          // main <= refined <= coarse
};

CompareReport compare_report(const PGroupParams& pp);

/// Closed-form identity C(delta,3) - C(r,3) - C(t,2) = sum_{i=2..k'+1}(delta-i)
/// for delta > k'+1, with (r,t) decomposing C(delta,2) - k'.
bool triangle_sum_identity(long long delta, long long kprime);

} // namespace schur

#endif
