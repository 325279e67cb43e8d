#include "schur/fieldmat.hpp"

#include <algorithm>

namespace schur {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FpMatrix::FpMatrix(Residue modulus, std::size_t r, std::size_t c)
    : p(modulus), rows(r), cols(c), entries(r * c, 0) {
    if (!is_prime(modulus)) throw NonPrimeModulus("modulus " + std::to_string(modulus) + " is not prime");
}

FpMatrix FpMatrix::identity(Residue modulus, std::size_t n) {
    FpMatrix m(modulus, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(Residue modulus, const std::vector<FpVector>& rws, std::size_t ncols) {
    FpMatrix m(modulus, rws.size(), ncols);
    for (std::size_t r = 0; r < rws.size(); ++r) {
        if (rws[r].size() != ncols) throw BadVectorLength("row length mismatch");
        std::copy(rws[r].begin(), rws[r].end(), m.entries.begin() + r * ncols);
    }
    return m;
}

FpVector FpMatrix::row_vec(std::size_t r) const {
    return FpVector(entries.begin() + r * cols, entries.begin() + (r + 1) * cols);
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(p, cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Residue fp_inv(Residue a, Residue p) {
    // extended Euclid; a != 0 mod p
    long long t = 0, newt = 1;
    long long r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += p;
    return Residue(t);
}

Residue fp_reduce(long long v, Residue p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return Residue(r);
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> eliminate(FpMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        Residue inv = fp_inv(m.at(r, c), m.p);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = fp_mul(m.at(r, j), inv, m.p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Residue f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(r, j), m.p), m.p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const FpMatrix& m) {
    // Accumulate rows into an echelon set; cheaper than full RREF on tall matrices.
    SpanAccumulator acc(m.p, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        acc.insert(m.row_vec(r));
        if (acc.rank() == std::min(m.rows, m.cols)) break;
    }
    return acc.rank();
}

RrefResult rref(const FpMatrix& m) {
    RrefResult out{m, {}};
    out.pivots = eliminate(out.matrix);
    return out;
}

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
    FpMatrix red = m;
    std::vector<std::size_t> pivots = eliminate(red);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<FpVector> ker;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        FpVector v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_neg(red.at(r, free), m.p);
        ker.push_back(std::move(v));
    }
    return ker;
}

bool in_span(const FpVector& v, const std::vector<FpVector>& s, Residue p) {
    SpanAccumulator acc(p, v.size());
    for (const auto& w : s) {
        if (w.size() != v.size()) throw BadVectorLength("span vectors must match length");
        acc.insert(w);
    }
    return acc.contains(v);
}

FpVector SpanAccumulator::reduce(const FpVector& v) const {
    if (v.size() != len_) throw BadVectorLength("vector length mismatch in span");
    FpVector w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Residue c = w[lead_[i]];
        if (c == 0) continue;
        for (std::size_t j = lead_[i]; j < len_; ++j)
            w[j] = fp_sub(w[j], fp_mul(c, basis_[i][j], p_), p_);
    }
    return w;
}

bool SpanAccumulator::contains(const FpVector& v) const {
    FpVector w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool SpanAccumulator::insert(const FpVector& v) {
    FpVector w = reduce(v);
    std::size_t lead = 0;
    while (lead < len_ && w[lead] == 0) ++lead;
    if (lead == len_) return false;
    Residue inv = fp_inv(w[lead], p_);
    for (std::size_t j = lead; j < len_; ++j) w[j] = fp_mul(w[j], inv, p_);
    // keep earlier rows reduced against the new one
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Residue c = basis_[i][lead];
        if (c == 0) continue;
        for (std::size_t j = lead; j < len_; ++j)
            basis_[i][j] = fp_sub(basis_[i][j], fp_mul(c, w[j], p_), p_);
    }
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    basis_.insert(basis_.begin() + pos, std::move(w));
    lead_.insert(lead_.begin() + pos, lead);
    return true;
}

} // namespace schur
