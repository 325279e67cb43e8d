#ifndef SCHUR_ALTMAP_HPP
#define SCHUR_ALTMAP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/fieldmat.hpp"

namespace schur {

using IndexPair = std::pair<int, int>;

/// Alternating bilinear map A : U x U -> V over F_p, U of dimension n and
/// V of dimension m. Only pairs i < j are stored (1-based); the value for
/// j > i is synthesized with a sign flip and absent pairs are zero.
struct AltMap {
    Residue p = 3;
    int n = 0; // dim U
    int m = 0; // dim V
    std::map<IndexPair, FpVector> table;

    AltMap() = default;
    AltMap(Residue p_, int n_, int m_);

    /// Table value for basis vectors e_i, e_j (any i != j; i == j gives zero).
    FpVector value(int i, int j) const;
    void set(int i, int j, FpVector v); // requires i < j

    /// m x C(n,2) matrix of all pair values, pairs in (i,j) lexicographic order.
    FpMatrix pair_value_matrix() const;
    /// (m*n) x n matrix of x -> (A(x, e_1), ..., A(x, e_n)) stacked.
    FpMatrix stacked_matrix() const;

    bool operator==(const AltMap&) const = default;
};

AltMap parse_altmap(const std::string& text);
std::string serialize_altmap(const AltMap& a);

/// Checks the spanning invariant: the pair values span V. Vacuous for m = 0.
void validate(const AltMap& a);

FpVector apply(const AltMap& a, const FpVector& x, const FpVector& y);

/// Basis of the radical {x : A(x, .) = 0}.
std::vector<FpVector> radical(const AltMap& a);

/// Invertible change of basis on U; change_basis yields A'(x,y) = A(Px, Py),
/// i.e. the new basis vectors are the columns of the matrix.
struct BasisChange {
    FpMatrix matrix; // n x n, invertible

    BasisChange() = default;
    explicit BasisChange(FpMatrix m);
    static BasisChange identity(Residue p, int n);
    static BasisChange permutation(Residue p, const std::vector<int>& image); // col k = e_{image[k]}
    BasisChange composed(const BasisChange& then) const;
};

AltMap change_basis(const AltMap& a, const BasisChange& pc);

struct QuotientResult {
    AltMap map;             // induced map on U/rad, dimension n' = n - dim rad
    FpMatrix projection;    // n' x n: coordinates of e_i modulo the radical
    std::vector<int> kept;  // 1-based indices of the chosen complement basis
};

/// Quotient by the radical. The complement basis is chosen greedily from
/// e_1, e_2, ... (leftmost standard vectors independent modulo the radical),
/// so the output is deterministic.
QuotientResult quotient_by_radical(const AltMap& a);

/// Deterministic random spanning map; rejects until the pair values have
/// full rank m. Requires m <= C(n,2).
AltMap random_altmap(Residue p, int n, int m, std::uint64_t seed);

} // namespace schur

#endif
