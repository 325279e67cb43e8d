#include <doctest.h>

#include <json.hpp>

#include "schur/report.hpp"
#include "schur/fixtures.hpp"

using namespace schur;

TEST_CASE("analysis of the d6k4 group fixture") {
    BoundReport r = analyze_map(fixtures::group_d6k4(3));
    CHECK(r.dim_u == 6);
    CHECK(r.dim_v == 4);
    CHECK(r.edges == 4);
    CHECK_FALSE(r.tree_of_height_one);
    CHECK(r.dim_psi_full == 12);
    CHECK(r.dim_psi_quotient == 8);
    CHECK(r.script_w_size == 12);
    CHECK(r.w_rank == 12);
    REQUIRE(r.group_view);
    CHECK(r.inv.delta == 5);
    CHECK(r.exact_multiplier_exponent == 23);
    CHECK(r.exact_h2_exponent == 29);
    CHECK(r.chain_exponent.effective() == 23);
    CHECK(r.consistent);
    REQUIRE(r.bounds.has_value());
    CHECK(r.bounds->entries[0].exponent.effective() == 25); // formula bound, not attained here
}

TEST_CASE("report JSON carries the same numbers") {
    BoundReport r = analyze_map(fixtures::group_d6k4(3));
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["input"]["p"] == 3);
    CHECK(j["psi"]["dim_im_full"] == 12);
    CHECK(j["psi"]["dim_im_quotient"] == 8);
    CHECK(j["group"]["exact_multiplier_exponent"] == 23);
    CHECK(j["group"]["exact_h2_exponent"] == 29);
    CHECK(j["group"]["invariants"]["delta"] == 5);
    CHECK(j["group"]["consistent"] == true);
    CHECK(j["graph"]["edges"] == 4);

    std::string text = report_to_text(r);
    CHECK(text.find("|M| = p^23") != std::string::npos);
    CHECK(text.find("|H^2| = p^29") != std::string::npos);
}

TEST_CASE("analysis is deterministic given map and order") {
    AltMap a = fixtures::demo_map_n5m4();
    BoundReport r1 = analyze_map(a), r2 = analyze_map(a);
    CHECK(r1.pair_basis.pairs == r2.pair_basis.pairs);
    CHECK(r1.dim_psi_full == r2.dim_psi_full);
    CHECK(r1.exact_multiplier_exponent == r2.exact_multiplier_exponent);
}

TEST_CASE("maps over F_2 report without the group view") {
    AltMap a = random_altmap(2, 5, 3, 99);
    BoundReport r = analyze_map(a);
    CHECK_FALSE(r.group_view);
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["group"]["present"] == false);
    CHECK_FALSE(j["group"].contains("exact_multiplier_exponent"));
}

TEST_CASE("analysis respects a custom order") {
    AltMap a = fixtures::demo_map_n5m4();
    BoundReport r = analyze_map(a, {5, 4, 3, 2, 1});
    CHECK(r.order == std::vector<int>{5, 4, 3, 2, 1});
    CHECK(int(r.pair_basis.pairs.size()) == a.m);
    // order changes the pair set but never the image dimensions
    CHECK(r.dim_psi_full == analyze_map(a).dim_psi_full);
}

TEST_CASE("compare report rendering") {
    CompareReport rep = compare_report({5, 21, 7, 6, 14, 14});
    nlohmann::json j = nlohmann::json::parse(compare_report_to_json(rep));
    CHECK(j["bounds"][0]["name"] == "main");
    CHECK(j["bounds"][0]["exponent"]["effective"] == 71);
    CHECK(j["ordering_ok"] == true);
    std::string text = compare_report_to_text(rep);
    CHECK(text.find("main: p^71") != std::string::npos);
}
