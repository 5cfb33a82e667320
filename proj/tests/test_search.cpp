#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdis/bounds.hpp"
#include "kdis/canon.hpp"
#include "kdis/enumeration.hpp"
#include "kdis/products.hpp"
#include "kdis/search.hpp"
#include "kdis/verify.hpp"

using namespace kdis;

TEST_CASE("per-order maxima, small fixed cases") {
    SearchReport r3 = compute_mi_table(3, 1, Family::All);
    CHECK(r3.optimum == 3);
    CHECK(r3.graphs_examined == 4);
    REQUIRE(r3.witnesses_total == 1);
    CHECK(is_isomorphic(graph6_decode(r3.witnesses[0]), Graph::complete(3)));

    SearchReport r5 = compute_mi_table(5, 1, Family::All);
    CHECK(r5.optimum == 6);
    bool has_k3_k2 = false;
    for (const auto& w : r5.witnesses)
        if (is_isomorphic(graph6_decode(w), disjoint_union(Graph::complete(3), Graph::complete(2))))
            has_k3_k2 = true;
    CHECK(has_k3_k2);

    CHECK(compute_mi_table(4, 2, Family::All).optimum == 2);
    CHECK(compute_mi_table(0, 2, Family::All).optimum == 1); // the empty graph
    CHECK(compute_mi_table(1, 3, Family::All).optimum == 1);
}

TEST_CASE("formula agreement on the cheap ranges") {
    for (int n = 2; n <= 7; ++n)
        CHECK(compute_mi_table(n, 1, Family::All).optimum == moon_moser_formula(n));
    for (int n = 1; n <= 8; ++n)
        CHECK(compute_mi_table(n, 1, Family::Tree).optimum == tree_formula(n));
    for (int n = 4; n <= 8; ++n)
        CHECK(compute_mi_table(n, 1, Family::TriangleFree).optimum == triangle_free_formula(n));
}

TEST_CASE("search witnesses decode to family members attaining the optimum") {
    for (Family f : {Family::All, Family::Connected, Family::TriangleFree, Family::Tree}) {
        SearchReport r = compute_mi_table(6, 1, f);
        CHECK(r.witnesses_total >= 1);
        CHECK(static_cast<long long>(r.witnesses.size()) == r.witnesses_total);
        for (const auto& w : r.witnesses) {
            Graph g = graph6_decode(w);
            CHECK(g.order() == 6);
            CHECK(family_contains(f, g));
            CHECK(count_kdis(g, 1) == r.optimum);
        }
    }
}

TEST_CASE("reports are identical across worker counts") {
    for (int k : {1, 2}) {
        SearchReport a = compute_mi_table(7, k, Family::All, 1);
        SearchReport b = compute_mi_table(7, k, Family::All, 8);
        CHECK(to_json(a).dump() == to_json(b).dump());
    }
}

TEST_CASE("m values, small fixed cases") {
    MResult m12 = compute_m(1, 2);
    CHECK(m12.conclusive);
    CHECK(m12.m_value == 2);
    CHECK(is_isomorphic(graph6_decode(m12.witness), Graph::complete(2)));

    MResult m13 = compute_m(1, 3);
    CHECK(m13.m_value == 3);

    MResult m22 = compute_m(2, 2);
    CHECK(m22.m_value == 4);
    CHECK(is_isomorphic(graph6_decode(m22.witness), Graph::complete_multipartite({2, 2})));

    MResult m23 = compute_m(2, 3);
    CHECK(m23.m_value == 6);
    CHECK(count_kdis(graph6_decode(m23.witness), 2) >= 3);

    MResult m24 = compute_m(2, 4, 8);
    CHECK(m24.m_value == 8);
    CHECK(count_kdis(graph6_decode(m24.witness), 2) >= 4);
}

TEST_CASE("m search reports inconclusive when the budget is too small") {
    MResult r = compute_m(2, 4, 5);
    CHECK_FALSE(r.conclusive);
    CHECK(r.m_value == -1);
    CHECK(r.searched_up_to == 5);
    auto j = to_json(r);
    CHECK(j["status"] == "inconclusive");
    CHECK(j["m_value"].is_null());

    CHECK_THROWS_AS(compute_m(2, 1), Error);
    CHECK_THROWS_AS(compute_m(0, 2), Error);
}

TEST_CASE("JSON report shape") {
    auto j = to_json(compute_mi_table(4, 1, Family::All));
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 1);
    CHECK(j["family"] == "all");
    CHECK(j["optimum"] == 4);
    CHECK(j["witnesses"].is_array());
    CHECK(j["witnesses_total"].get<long long>() >= 1);
    CHECK(j["graphs_examined"] == 11);
    CHECK_FALSE(j.contains("elapsed_seconds")); // reports must be byte-stable
}

TEST_CASE("budget and domain errors") {
    CHECK_THROWS_AS(compute_mi_table(11, 1, Family::All), Error);
    CHECK_THROWS_AS(compute_mi_table(13, 1, Family::Tree), Error);
    CHECK_THROWS_AS(compute_mi_table(4, 0, Family::All), Error);
    CHECK_THROWS_AS(compute_mi_table(0, 1, Family::Tree), Error);
}

TEST_CASE("verification suites run and report deterministically") {
    verify::Options o;
    o.moon_n_max = 5;
    o.trees_n_max = 6;
    o.triangle_free_n_max = 6;
    o.connected_n_max = 6;
    o.m_n_budget = 6;
    o.recurrence_n_max = 5;
    o.prop31_samples = 20;
    o.f2_k_hi = 100;

    for (const auto& name : verify::suite_names()) {
        verify::SuiteReport rep = verify::run_suite(name, o);
        CHECK(rep.suite == name);
        CHECK(!rep.checks.empty());
        auto j = verify::to_json(rep);
        CHECK(j["checks"].size() == rep.checks.size());
        CHECK(j["ok"].get<bool>() == rep.ok());
    }
    CHECK_THROWS_AS(verify::run_suite("bogus", o), Error);

    verify::Options o1 = o;
    o1.jobs = 1;
    verify::Options o8 = o;
    o8.jobs = 8;
    CHECK(verify::to_json(verify::run_suite("all", o1)).dump() ==
          verify::to_json(verify::run_suite("all", o8)).dump());
}
