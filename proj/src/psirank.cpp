#include "schur/psirank.hpp"

#include <algorithm>

#include "schur/trigraph.hpp"

namespace schur {

FpVector psi_apply(const AltMap& a, const FpVector& x, const FpVector& y, const FpVector& z) {
    FpVector out(std::size_t(a.m) * a.n, 0);
    auto accumulate = [&](const FpVector& val, const FpVector& tensor_arg) {
        for (int t = 0; t < a.m; ++t) {
            if (val[t] == 0) continue;
            for (int u = 0; u < a.n; ++u) {
                std::size_t col = std::size_t(t) * a.n + u;
                out[col] = fp_add(out[col], fp_mul(val[t], tensor_arg[u], a.p), a.p);
            }
        }
    };
    accumulate(apply(a, x, y), z);
    accumulate(apply(a, y, z), x);
    accumulate(apply(a, z, x), y);
    return out;
}

FpVector psi_row(const AltMap& a, int i, int j, int k) {
    FpVector out(std::size_t(a.m) * a.n, 0);
    auto accumulate = [&](int s, int t, int arg) {
        FpVector val = a.value(s, t);
        for (int c = 0; c < a.m; ++c) {
            std::size_t col = std::size_t(c) * a.n + (arg - 1);
            out[col] = fp_add(out[col], val[c], a.p);
        }
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
    return out;
}

PsiMatrix psi_matrix(const AltMap& a) {
    PsiMatrix pm;
    pm.source = a;
    pm.n = a.n;
    pm.m = a.m;
    for (int i = 1; i <= a.n; ++i)
        for (int j = i + 1; j <= a.n; ++j)
            for (int k = j + 1; k <= a.n; ++k) pm.triples.push_back({i, j, k});
    // ascending triple order: max, then the leftover pair (max, then min)
    std::sort(pm.triples.begin(), pm.triples.end(), [](const IndexTriple& x, const IndexTriple& y) {
        if (x[2] != y[2]) return x[2] < y[2];
        if (x[1] != y[1]) return x[1] < y[1];
        return x[0] < y[0];
    });
    pm.matrix = FpMatrix(a.p, pm.triples.size(), std::size_t(a.m) * a.n);
    for (std::size_t r = 0; r < pm.triples.size(); ++r) {
        FpVector row = psi_row(a, pm.triples[r][0], pm.triples[r][1], pm.triples[r][2]);
        std::copy(row.begin(), row.end(), pm.matrix.entries.begin() + r * pm.matrix.cols);
    }
    return pm;
}

std::size_t dim_im_psi(const AltMap& a) {
    if (a.n < 3 || a.m == 0) return 0;
    return rank(psi_matrix(a).matrix);
}

std::vector<IndexTriple> script_w(const std::vector<IndexPair>& pairs, int n, const std::vector<int>& order) {
    std::vector<IndexTriple> out;
    for (auto [i, j] : pairs)
        for (int c = 1; c <= n; ++c) {
            if (c == i || c == j) continue;
            IndexTriple t{i, j, c};
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::stable_sort(out.begin(), out.end(), [&](const IndexTriple& x, const IndexTriple& y) {
        return triple_cmp(x, y, order) == std::strong_ordering::less;
    });
    return out;
}

std::vector<IndexTriple> script_w(const std::vector<IndexPair>& pairs, int n) {
    return script_w(pairs, n, natural_order(n));
}

std::vector<FpVector> w_vectors(const AltMap& a, const PairBasis& pb) {
    std::vector<int> pos(a.n + 1, 0);
    for (std::size_t k = 0; k < pb.order.size(); ++k) pos[pb.order[k]] = int(k);
    std::vector<FpVector> rows;
    for (IndexTriple t : script_w(pb.pairs, a.n, pb.order)) {
        std::sort(t.begin(), t.end(), [&](int x, int y) { return pos[x] < pos[y]; });
        rows.push_back(psi_row(a, t[0], t[1], t[2]));
    }
    return rows;
}

long long lb_estimate(int n, int m) {
    long long pairs = binomial(n, 2);
    if (m > pairs) throw InvalidParams("dim V exceeds C(n,2)");
    RTDecomposition d = rt_decompose(pairs - m);
    return binomial(n, 3) - binomial(d.r, 3) - binomial(d.t, 2);
}

long long lb_nontree(int n, int m) {
    long long total = m - 2;
    for (int i = 2; i <= m + 1; ++i) total += n - i;
    return total;
}

long long lb_special_shape(int d, int k) {
    if (d <= k + 1) throw HypothesisViolated("requires d > k + 1");
    if (k <= 2) throw HypothesisViolated("requires k > 2");
    return lb_nontree(d, k);
}

} // namespace schur
