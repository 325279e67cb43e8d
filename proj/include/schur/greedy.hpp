#ifndef SCHUR_GREEDY_HPP
#define SCHUR_GREEDY_HPP

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "schur/altmap.hpp"

namespace schur {

using IndexTriple = std::array<int, 3>;

std::vector<int> natural_order(int n);

/// Two-clause order on unordered index pairs: compare the maxima of the two
/// pairs under `order` (a permutation of 1..n listing the basis from least
/// to greatest), then the remaining elements. Total order.
std::strong_ordering pair_cmp(IndexPair a, IndexPair b, const std::vector<int>& order);

/// Same scheme one level up: compare maxima of the 3-sets, then the leftover
/// pairs via pair_cmp.
std::strong_ordering triple_cmp(const IndexTriple& a, const IndexTriple& b, const std::vector<int>& order);

struct TraceStep {
    IndexPair pair;
    bool accepted;
    int rank_before; // span rank before this candidate was examined
};

/// Output of the greedy pair scan: the accepted pairs (in scan order), the
/// corresponding independent values forming a basis of V, and the full
/// accept/reject trace.
struct PairBasis {
    std::vector<int> order;               // permutation of 1..n used for the scan
    std::vector<IndexPair> pairs;         // each stored (lower, higher) position-wise
    std::vector<FpVector> basis;          // A(u_i,u_j) for the accepted pairs
    std::vector<TraceStep> trace;

    bool contains(IndexPair pr) const;
};

/// Scans all pairs in ascending pair_cmp order and accepts the ones whose
/// value falls outside the span of the values accepted so far; stops once
/// m independent values are collected. Deterministic in (map, order).
PairBasis construct_pair_basis(const AltMap& a, const std::vector<int>& order);
PairBasis construct_pair_basis(const AltMap& a);

/// True when one vertex lies in every pair (a star). For a single pair both
/// endpoints qualify; the smaller index is reported.
std::pair<bool, std::optional<int>> is_tree_of_height_one(const std::vector<IndexPair>& pairs);

struct NormalizationOutcome {
    enum class Kind { NonTree, Normalized };
    Kind kind;
    BasisChange change;  // apply to the input map, then scan in natural order
    int exit_step;       // 0..4: which stage settled the classification
    PairBasis pair_basis; // scan of the transformed map
    // checked witnesses, only meaningful for Normalized
    bool p1 = false, p2 = false, p3 = false, p4 = false;
};

/// Produces a basis change under which the greedy pair set either fails to
/// be a star, or satisfies the four normal-form properties: the pair set is
/// {{1,2},..,{1,m+1}}; A(u_1,u_i) = 0 for i >= m+2; A(u_i,u_j) = 0 for
/// m+1 < i < j; and A(u_i,u_j) proportional to A(u_1,u_i) for
/// 2 <= i <= m+1 < j. Every stage re-runs the scan on the transformed map
/// and returns only machine-checked outcomes. Requires m > 2 and n > m+1.
NormalizationOutcome normalize_pair_basis(const AltMap& a);

} // namespace schur

#endif
