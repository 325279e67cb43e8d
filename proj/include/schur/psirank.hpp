#ifndef SCHUR_PSIRANK_HPP
#define SCHUR_PSIRANK_HPP

#include "schur/altmap.hpp"
#include "schur/greedy.hpp"

namespace schur {

/// Matrix of the induced linear map U (x) U (x) U -> V (x) U. Rows are the
/// C(n,3) triples i < j < k in ascending triple order; columns run over the
/// V (x) U basis with the V index major: column = v_index * n + u_index.
struct PsiMatrix {
    FpMatrix matrix;
    std::vector<IndexTriple> triples;
    AltMap source; // the map the rows were built from
    int n = 0;
    int m = 0;
};

/// Row for one ordered argument triple (x, y, z) given by coordinates:
/// A(x,y) (x) z + A(y,z) (x) x + A(z,x) (x) y.
FpVector psi_apply(const AltMap& a, const FpVector& x, const FpVector& y, const FpVector& z);
FpVector psi_row(const AltMap& a, int i, int j, int k);

PsiMatrix psi_matrix(const AltMap& a);
std::size_t dim_im_psi(const AltMap& a);

/// All 3-sets containing at least one pair of the pair set, deduplicated and
/// sorted ascending in the triple order induced by `order`.
std::vector<IndexTriple> script_w(const std::vector<IndexPair>& pairs, int n, const std::vector<int>& order);
std::vector<IndexTriple> script_w(const std::vector<IndexPair>& pairs, int n);

/// Image rows for the script_w triples of a pair basis, each evaluated on the
/// orientation sorted ascending under the pair basis ordering.
std::vector<FpVector> w_vectors(const AltMap& a, const PairBasis& pb);

/// C(n,3) - C(r,3) - C(t,2) for the decomposition of C(n,2) - m; a lower
/// bound on the number of independent image vectors for any spanning map.
long long lb_estimate(int n, int m);

/// Sharper bound sum_{i=2..m+1}(n-i) + (m-2), valid when the pair set is
/// not a star.
long long lb_nontree(int n, int m);

/// Special-shape variant sum_{i=2..k+1}(d-i) + (k-2); needs d > k+1, k > 2.
long long lb_special_shape(int d, int k);

} // namespace schur

#endif
