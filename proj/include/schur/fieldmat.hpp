#ifndef SCHUR_FIELDMAT_HPP
#define SCHUR_FIELDMAT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "schur/errors.hpp"

namespace schur {

using Residue = std::uint32_t;
using FpVector = std::vector<Residue>;

bool is_prime(std::uint64_t p);

/// Dense matrix over F_p, p prime < 2^31. Entries are kept reduced in [0, p)
/// at all times so equality and serialization are canonical.
struct FpMatrix {
    Residue p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Residue> entries; // row-major, rows*cols residues

    FpMatrix() = default;
    FpMatrix(Residue modulus, std::size_t r, std::size_t c);
    static FpMatrix identity(Residue modulus, std::size_t n);
    static FpMatrix from_rows(Residue modulus, const std::vector<FpVector>& rws, std::size_t ncols);

    Residue& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    Residue at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    std::span<const Residue> row(std::size_t r) const { return {entries.data() + r * cols, cols}; }
    FpVector row_vec(std::size_t r) const;
    FpMatrix transposed() const;

    bool operator==(const FpMatrix&) const = default;
};

// F_p scalar helpers (inputs already reduced).
inline Residue fp_add(Residue a, Residue b, Residue p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return Residue(s >= p ? s - p : s);
}
inline Residue fp_sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : Residue(a + p - b); }
inline Residue fp_neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue fp_mul(Residue a, Residue b, Residue p) { return Residue((std::uint64_t(a) * b) % p); }
Residue fp_inv(Residue a, Residue p);
Residue fp_reduce(long long v, Residue p);

std::size_t rank(const FpMatrix& m);

struct RrefResult {
    FpMatrix matrix;
    std::vector<std::size_t> pivots; // pivot column per nonzero row, ascending
};

/// Reduced row-echelon form by Gauss-Jordan, pivoting on the first nonzero
/// entry of each column. Exact over F_p, no growth to worry about.
RrefResult rref(const FpMatrix& m);

/// Basis of {x : m x = 0}; always cols - rank(m) vectors.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

bool in_span(const FpVector& v, const std::vector<FpVector>& s, Residue p);

/// Incremental row span: keeps an echelonized basis so repeated membership
/// tests are O(rank * len) instead of re-eliminating from scratch. This is
/// the workhorse behind the greedy pair scan.
class SpanAccumulator {
public:
    SpanAccumulator(Residue p, std::size_t len) : p_(p), len_(len) {}

    std::size_t rank() const { return basis_.size(); }
    bool contains(const FpVector& v) const;
    /// Inserts v if it enlarges the span; returns true when it did.
    bool insert(const FpVector& v);

private:
    FpVector reduce(const FpVector& v) const;

    Residue p_;
    std::size_t len_;
    std::vector<FpVector> basis_;           // echelon rows, leading entry 1
    std::vector<std::size_t> lead_;         // leading column per basis row
};

} // namespace schur

#endif
