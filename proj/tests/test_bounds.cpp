#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kdis/bounds.hpp"

using namespace kdis;
using doctest::Approx;

TEST_CASE("kernel-count formula values") {
    const long long expected[] = {0, 0, 2, 3, 4, 6, 9, 12, 18, 27};
    for (int n = 2; n <= 9; ++n) CHECK(moon_moser_formula(n) == expected[n]);
    CHECK(moon_moser_formula(12) == 81);
    CHECK_THROWS_AS(moon_moser_formula(1), Error); // the n=1 case is not covered by the case split
    CHECK_THROWS_AS(moon_moser_formula(0), Error);
}

TEST_CASE("tree formula values") {
    const long long expected[] = {0, 1, 2, 2, 3, 4, 5, 8, 9, 16, 17};
    for (int n = 1; n <= 10; ++n) CHECK(tree_formula(n) == expected[n]);
    CHECK_THROWS_AS(tree_formula(0), Error);
}

TEST_CASE("triangle-free formula values") {
    const long long expected[] = {0, 0, 0, 0, 4, 5, 8, 10, 16, 20};
    for (int n = 4; n <= 9; ++n) CHECK(triangle_free_formula(n) == expected[n]);
    CHECK_THROWS_AS(triangle_free_formula(3), Error);
}

TEST_CASE("connected formula surfaces non-integral cases") {
    Rational r6 = connected_formula_printed(6);
    CHECK(r6.integral());
    CHECK(r6.num == 8);

    Rational r7 = connected_formula_printed(7);
    CHECK_FALSE(r7.integral());
    CHECK(r7.num == 27);
    CHECK(r7.den == 2); // 13.5 as printed
    CHECK(r7.str() == "27/2");

    Rational r9 = connected_formula_printed(9);
    CHECK(r9.integral());
    CHECK(r9.num == 22);

    Rational r4 = connected_formula_printed(4);
    CHECK_FALSE(r4.integral()); // 9/2

    Rational r5 = connected_formula_printed(5); // the doubled term evaluates to 8
    CHECK(r5.integral());
    CHECK(r5.num == 8);
}

TEST_CASE("base of the upper bound") {
    // at eps = 0 the base collapses to 2^(k/(k+1))
    CHECK(c_pow_k(3, 0.0) == Approx(1.6817928305074290).epsilon(1e-14));
    CHECK(c_pow_k(3, 0.0) == Approx(std::pow(2.0, 3.0 / 4.0)).epsilon(1e-15));

    // frozen from the extended-precision evaluator
    CHECK(c_pow_k(3, 0.053) == Approx(1.6800981721056993).epsilon(1e-13));
    CHECK(hp::c_pow_k(3, 0.053) == Approx(1.6800981721056993).epsilon(1e-15));
    CHECK(c_pow_k(10, 0.053) == Approx(1.8661037073944940).epsilon(1e-13));
    CHECK(c_pow_k(1000000, 0.053) == Approx(1.9800008977950313).epsilon(1e-13));

    // increasing in k
    double prev = 0.0;
    for (long long k : {3LL, 10LL, 100LL, 1000000LL}) {
        double v = c_pow_k(k, 0.053);
        CHECK(v > prev);
        prev = v;
    }
    BoundParams params{5, 0.053, 0.8};
    CHECK(params.c_pow_k() == Approx(c_pow_k(5, 0.053)));
    CHECK(params.b_threshold() == Approx(4.0));
}

TEST_CASE("bound function spot values, double vs extended precision") {
    // regression pins for the transcriptions, frozen from the quad evaluator
    CHECK(f0(3, 0.053, 0.8) == Approx(0.13358294449113353).epsilon(1e-12));
    CHECK(f1(1001, 0.053, 0.8) == Approx(0.0030650496739016).epsilon(1e-9));
    CHECK(f2(3, 0.053, 0.8) == Approx(-0.81553550381762944).epsilon(1e-12));
    CHECK(f2(1000000, 0.053, 0.8) == Approx(0.0021116811936443).epsilon(1e-9));
    CHECK(f3(1000000, 0.053, 0.8) == Approx(0.0015419324128875).epsilon(1e-9));

    for (SweepFn fn : {SweepFn::F0, SweepFn::F1, SweepFn::F2, SweepFn::F3})
        for (long long k : {3LL, 17LL, 1000LL, 12345LL})
            CHECK(f_eval(fn, k, 0.053, 0.8) == Approx(hp::f_eval(fn, k, 0.053, 0.8)).epsilon(1e-11));

    CHECK(f0(3, 0.053, 0.8) > 0);
    CHECK(f2(1000000, 0.053, 0.8) > 0);
    CHECK(f1(1001, 0.053, 0.8) > 0);
    CHECK_THROWS_AS(f0(2, 0.053, 0.8), Error);
}

TEST_CASE("positivity sweeps") {
    SweepReport f0_rep = sweep_positivity(SweepFn::F0, 3, 1000, 0.053, 0.8);
    CHECK(f0_rep.all_positive);
    CHECK(f0_rep.argmin_k == 1000);
    CHECK(f0_rep.min_value == Approx(0.0071021212).epsilon(1e-7));

    // single-point sweep
    SweepReport single = sweep_positivity(SweepFn::F0, 3, 3, 0.0, 0.8);
    CHECK(single.argmin_k == 3);
    CHECK(single.min_value == Approx(f0(3, 0.0, 0.8)));

    // the third bound function dips negative at its lower end; the sweep
    // reports that honestly
    SweepReport f2_rep = sweep_positivity(SweepFn::F2, 3, 3000, 0.053, 0.8);
    CHECK_FALSE(f2_rep.all_positive);
    CHECK(f2_rep.argmin_k == 3);
    CHECK(f2_rep.min_value == Approx(-0.8155355038).epsilon(1e-8));

    // deterministic across worker counts
    SweepReport a = sweep_positivity(SweepFn::F1, 3, 5000, 0.053, 0.8, 1);
    SweepReport b = sweep_positivity(SweepFn::F1, 3, 5000, 0.053, 0.8, 7);
    CHECK(a.min_value == b.min_value);
    CHECK(a.argmin_k == b.argmin_k);
    CHECK(a.all_positive == b.all_positive);

    CHECK_THROWS_AS(sweep_positivity(SweepFn::F0, 2, 10, 0.053, 0.8), Error);
    CHECK_THROWS_AS(sweep_positivity(SweepFn::F0, 5, 4, 0.053, 0.8), Error);
}

TEST_CASE("sweep CSV export") {
    std::string csv = sweep_csv(SweepFn::F0, 3, 5, 0.053, 0.8);
    CHECK(csv.substr(0, 8) == "k,value\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("3,0.1335829444911335") != std::string::npos);
}

TEST_CASE("remark inequality") {
    CHECK(remark_inequality(0.053, 3));
    CHECK_FALSE(remark_inequality(0.0, 3)); // 1 > 1 fails
    CHECK(remark_inequality(0.5, 10));
    // once true at k=3 it stays true for larger k
    for (long long k : {4LL, 10LL, 100LL, 588503LL}) CHECK(remark_inequality(0.053, k));
}

TEST_CASE("appendix condition and monotonicity") {
    CHECK(appendix_condition(0.0, 3)); // 4/3 <= 2 ln 2
    CHECK_FALSE(appendix_condition(0.0, 1)); // 2 > 2 ln 2
    const double grid[] = {0.0, 0.05, 0.1, 0.5, 1.0, 5.0};
    CHECK(f_eps_monotone(3, grid));
    CHECK(f_eps_monotone(1000, grid));
}

TEST_CASE("construction rates") {
    CHECK(construction_rate(2, 6, 9) == Approx(1.4890953247181091).epsilon(1e-12));
    CHECK(construction_rate(3, 2, 6) == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(construction_rate(5, 2, 10) == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(construction_rate(2, 6, 9) > construction_rate(2, 2, 4));
    CHECK_THROWS_AS(construction_rate(2, 6, 0), Error);
}

TEST_CASE("degree bound") {
    CHECK(nagy_degree_bound(2, 2, 5) == Approx(3.1748021039363989).epsilon(1e-12));
    CHECK(nagy_degree_bound(3, 3, 4) == Approx(2.0)); // 2^(4/4)
    CHECK_THROWS_AS(nagy_degree_bound(3, 2, 5), Error);
}
