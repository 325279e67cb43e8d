#ifndef SCHUR_GROUPLAB_HPP
#define SCHUR_GROUPLAB_HPP

#include <string>
#include <vector>

#include "schur/altmap.hpp"
#include "schur/bounds.hpp"

namespace schur {

/// A nonabelian class-2 exponent-p group (p odd) presented by its commutator
/// map: generators g_1..g_d span U, commutator generators q_1..q_k span V,
/// and [g_i, g_j] is the table value of the pair (i, j).
struct ClassTwoGroup {
    AltMap map;
};

/// Validates p odd prime, dim V >= 1 and the spanning invariant.
ClassTwoGroup make_class_two_group(AltMap map);

struct GroupInvariants {
    Residue p;
    long long n;      // group order exponent, = d + k
    long long d;      // minimal generators
    long long delta;  // d(G/Z) = d - dim radical
    long long k;      // |gamma_2| exponent = dim V
    long long kprime; // = k for this class

    PGroupParams params() const { return {p, n, d, delta, k, kprime}; }
};

GroupInvariants invariants(const ClassTwoGroup& g);

/// Exact multiplier order exponent via the five-term exact sequence:
/// d*k + C(d,2) - dim(im Psi on U) - k.
long long schur_exponent_exact(const ClassTwoGroup& g);

/// d + schur_exponent_exact(g); the multiplier is treated as elementary
/// abelian, which every shipped fixture confirms.
long long h2_exponent(const ClassTwoGroup& g);

/// The sharpness construction: a capable group with prescribed (d, delta, k),
/// k = k'. Kept commutator pairs get distinct standard basis vectors, the
/// C(r,2) + t pairs inside the tail clique-with-pendant pattern are killed,
/// and d - delta direct (Z/p) factors pad the generator count.
/// Requires p odd, 2 <= delta <= d, delta - 1 <= k <= C(delta, 2).
ClassTwoGroup construct_sharp_group(Residue p, int d, int delta, int k);

/// Per-prime multiplier exponents of a direct product of groups with
/// pairwise distinct primes (the cross tensor terms vanish).
std::vector<std::pair<Residue, long long>> multiplier_of_coprime_product(const std::vector<ClassTwoGroup>& parts);

enum class Capability { Capable, Unknown };

/// Sufficient criterion: on the leftmost standard-vector complement of the
/// radical, the nontrivial pairwise commutators must be pairwise distinct
/// and form a basis of V. Failure only means "not decided here".
Capability capability_check(const ClassTwoGroup& g);

/// Text presentation in generators g_i, q_j with power, centrality and
/// commutator relations. parse_presentation inverts it exactly.
std::string to_presentation(const ClassTwoGroup& g);
ClassTwoGroup parse_presentation(const std::string& text);

} // namespace schur

#endif
