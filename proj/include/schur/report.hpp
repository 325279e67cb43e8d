#ifndef SCHUR_REPORT_HPP
#define SCHUR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "schur/altmap.hpp"
#include "schur/bounds.hpp"
#include "schur/greedy.hpp"
#include "schur/grouplab.hpp"

namespace schur {

/// Everything the analyze pipeline derives from one map: the pair basis and
/// its graph, both image dimensions, the counting bounds, and (for odd p)
/// the group invariants with exact multiplier and H^2 orders.
struct BoundReport {
    // input echo
    Residue p = 3;
    int dim_u = 0;
    int dim_v = 0;
    std::size_t entry_count = 0;
    std::vector<int> order;

    PairBasis pair_basis;
    long long edges = 0;
    bool tree_of_height_one = false;
    std::optional<int> apex;
    long long complement_triangles = 0;

    long long script_w_size = 0;
    long long w_rank = 0;
    long long lower_bound_estimate = 0;
    long long lower_bound_nontree = 0; // applicable when not a star
    std::size_t dim_psi_full = 0;
    std::size_t dim_psi_quotient = 0;

    bool group_view = false; // p odd: the map is a class-2 exponent-p group
    GroupInvariants inv{};
    long long exact_multiplier_exponent = 0;
    long long exact_h2_exponent = 0;
    Exponent chain_exponent{};
    std::optional<CompareReport> bounds;
    bool consistent = false; // exact <= chain <= main bound, and rank chain holds

    double elapsed_ms = 0.0;
};

BoundReport analyze_map(const AltMap& a, const std::vector<int>& order);
BoundReport analyze_map(const AltMap& a);

std::string report_to_json(const BoundReport& r);
std::string report_to_text(const BoundReport& r);

std::string compare_report_to_json(const CompareReport& r);
std::string compare_report_to_text(const CompareReport& r);

} // namespace schur

#endif
