#include "schur/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "schur/psirank.hpp"
#include "schur/trigraph.hpp"

namespace schur {

BoundReport analyze_map(const AltMap& a, const std::vector<int>& order) {
    auto start = std::chrono::steady_clock::now();
    validate(a);

    BoundReport r;
    r.p = a.p;
    r.dim_u = a.n;
    r.dim_v = a.m;
    r.entry_count = a.table.size();
    r.order = order;

    r.pair_basis = construct_pair_basis(a, order);
    auto [tree, apex] = is_tree_of_height_one(r.pair_basis.pairs);
    r.tree_of_height_one = tree;
    r.apex = apex;
    SimpleGraph g = graph_of_pairset(r.pair_basis.pairs, a.n);
    r.edges = static_cast<long long>(g.edges.size());
    r.complement_triangles = count_triangles(complement(g));

    std::vector<IndexTriple> w = script_w(r.pair_basis.pairs, a.n, order);
    r.script_w_size = static_cast<long long>(w.size());
    r.w_rank = static_cast<long long>(rank(
        FpMatrix::from_rows(a.p, w_vectors(a, r.pair_basis), std::size_t(a.m) * a.n)));
    r.lower_bound_estimate = lb_estimate(a.n, a.m);
    r.lower_bound_nontree = lb_nontree(a.n, a.m);

    r.dim_psi_full = dim_im_psi(a);
    QuotientResult q = quotient_by_radical(a);
    r.dim_psi_quotient = dim_im_psi(q.map);

    if (a.p != 2) {
        r.group_view = true;
        ClassTwoGroup grp = make_class_two_group(a);
        r.inv = invariants(grp);
        r.exact_multiplier_exponent = schur_exponent_exact(grp);
        r.exact_h2_exponent = h2_exponent(grp);
        r.chain_exponent = exp_chain(r.inv.params(), static_cast<long long>(r.dim_psi_quotient));
        r.bounds = compare_report(r.inv.params());
        long long main_eff = r.bounds->entries.front().exponent.effective();
        r.consistent = r.exact_multiplier_exponent <= r.chain_exponent.effective() &&
                       r.chain_exponent.effective() <= main_eff &&
                       static_cast<long long>(r.dim_psi_full) >=
                           r.inv.k * (r.inv.d - r.inv.delta) + static_cast<long long>(r.dim_psi_quotient);
    }

    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

BoundReport analyze_map(const AltMap& a) { return analyze_map(a, natural_order(a.n)); }

namespace {

nlohmann::json exponent_json(const Exponent& e) {
    return {{"exact", e.str()}, {"effective", e.effective()}};
}

nlohmann::json compare_json(const CompareReport& r) {
    nlohmann::json j;
    j["params"] = {{"p", r.params.p}, {"n", r.params.n}, {"d", r.params.d},
                   {"delta", r.params.delta}, {"k", r.params.k}, {"kprime", r.params.kprime}};
    j["bounds"] = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json b = {{"name", e.name}, {"exponent", exponent_json(e.exponent)}};
        if (!e.note.empty()) b["note"] = e.note;
        j["bounds"].push_back(std::move(b));
    }
    j["ordering_ok"] = r.ordering_ok;
    return j;
}

} // namespace

std::string report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["input"] = {{"p", r.p}, {"dimU", r.dim_u}, {"dimV", r.dim_v},
                  {"entries", r.entry_count}, {"order", r.order}};
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [i, jdx] : r.pair_basis.pairs) pairs.push_back({i, jdx});
    j["pair_basis"] = {{"pairs", pairs}, {"values", r.pair_basis.basis}};
    j["graph"] = {{"edges", r.edges},
                  {"tree_of_height_one", r.tree_of_height_one},
                  {"complement_triangles", r.complement_triangles}};
    if (r.apex) j["graph"]["apex"] = *r.apex;
    j["psi"] = {{"dim_im_full", r.dim_psi_full},
                {"dim_im_quotient", r.dim_psi_quotient},
                {"script_w_size", r.script_w_size},
                {"w_rank", r.w_rank},
                {"lower_bound_estimate", r.lower_bound_estimate},
                {"lower_bound_nontree", r.lower_bound_nontree}};
    j["group"] = {{"present", r.group_view}};
    if (r.group_view) {
        j["group"]["invariants"] = {{"n", r.inv.n}, {"d", r.inv.d}, {"delta", r.inv.delta},
                                    {"k", r.inv.k}, {"kprime", r.inv.kprime}};
        j["group"]["exact_multiplier_exponent"] = r.exact_multiplier_exponent;
        j["group"]["exact_h2_exponent"] = r.exact_h2_exponent;
        j["group"]["chain_exponent"] = exponent_json(r.chain_exponent);
        j["group"]["bounds"] = compare_json(*r.bounds);
        j["group"]["consistent"] = r.consistent;
    }
    j["timing_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string report_to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "map: p=" << r.p << " dimU=" << r.dim_u << " dimV=" << r.dim_v
        << " entries=" << r.entry_count << "\n";
    out << "pair basis:";
    for (auto [i, j] : r.pair_basis.pairs) out << " {" << i << "," << j << "}";
    out << "\n";
    out << "graph: edges=" << r.edges << " tree_of_height_one=" << (r.tree_of_height_one ? "yes" : "no");
    if (r.apex) out << " apex=" << *r.apex;
    out << " complement_triangles=" << r.complement_triangles << "\n";
    out << "image: dim_full=" << r.dim_psi_full << " dim_quotient=" << r.dim_psi_quotient
        << " |script_w|=" << r.script_w_size << " w_rank=" << r.w_rank
        << " lb_estimate=" << r.lower_bound_estimate;
    if (!r.tree_of_height_one) out << " lb_nontree=" << r.lower_bound_nontree;
    out << "\n";
    if (r.group_view) {
        out << "group: n=" << r.inv.n << " d=" << r.inv.d << " delta=" << r.inv.delta
            << " k=" << r.inv.k << " k'=" << r.inv.kprime << "\n";
        out << "exact: |M| = p^" << r.exact_multiplier_exponent
            << ", |H^2| = p^" << r.exact_h2_exponent
            << ", chain = p^" << r.chain_exponent.str() << "\n";
        for (const auto& e : r.bounds->entries)
            out << "bound " << e.name << ": p^" << e.exponent.str()
                << " (effective " << e.exponent.effective() << ")"
                << (e.note.empty() ? "" : "  [" + e.note + "]") << "\n";
        out << "consistent: " << (r.consistent ? "yes" : "NO") << "\n";
    }
    out << "elapsed_ms: " << r.elapsed_ms << "\n";
    return out.str();
}

std::string compare_report_to_json(const CompareReport& r) { return compare_json(r).dump(2) + "\n"; }

std::string compare_report_to_text(const CompareReport& r) {
    std::ostringstream out;
    out << "params: p=" << r.params.p << " n=" << r.params.n << " d=" << r.params.d
        << " delta=" << r.params.delta << " k=" << r.params.k << " k'=" << r.params.kprime << "\n";
    for (const auto& e : r.entries)
        out << e.name << ": p^" << e.exponent.str() << " (effective " << e.exponent.effective() << ")"
            << (e.note.empty() ? "" : "  [" + e.note + "]") << "\n";
    out << "ordering main <= refined <= coarse: " << (r.ordering_ok ? "ok" : "VIOLATED") << "\n";
    return out.str();
}

} // namespace schur
