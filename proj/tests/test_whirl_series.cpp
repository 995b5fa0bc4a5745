#include "doctest.h"
#include "oracles.hpp"
#include "rectlab/whirl_series.hpp"

using namespace rectlab;

TEST_CASE("xpoly operators") {
    const int N = 6;
    const XPoly x1 = XPoly::monomial(0, 1, 0, 0, 0, 1, N);
    const XPoly x1sq = x1 * x1;
    // (x^2 - 1)/(x - 1) = x + 1
    CHECK(x1sq.divided_difference(1) == x1 + XPoly::constant(1, N));
    CHECK(x1sq.at_one(1) == XPoly::constant(1, N));
    CHECK(x1sq.coeff_x(1, 2) == XPoly::constant(1, N));
    CHECK(x1sq.coeff_x(1, 1).is_zero());
    const XPoly x2 = x1.permute({2, 3, 4, 1});
    CHECK(x2 == XPoly::monomial(0, 0, 1, 0, 0, 1, N));
    const XPoly shifted = x1.shift_t(N + 1);
    CHECK(shifted.is_zero());
    CHECK(x1.shift_t(2).t_valuation() == 2);
    CHECK(elementary(4, N).size() == 1);
    CHECK(elementary(2, N).size() == 6);
    CHECK(divide_exact(x1sq - XPoly::constant(1, N), x1 - XPoly::constant(1, N)) == x1 + XPoly::constant(1, N));
    CHECK_THROWS_AS(divide_exact(x1sq, x1 + XPoly::constant(1, N)), std::domain_error);
}

TEST_CASE("functional equation") {
    const auto sol = solve_funceq(10);
    const XPoly& F = sol.F;
    CHECK(F.coeff_t(5) == elementary(4, 10).coeff_t(0));
    CHECK(F.t_valuation() == 5);
    CHECK(funceq_operator(F) == F);
    const QSeries spec = F.specialize_ones();
    for (int k = 5; k <= 10; ++k) CHECK(spec[k] == mpq_class(oracle::catalan_power(4, k - 5)));
    for (std::size_t i = 1; i < sol.change_valuations.size(); ++i) {
        CHECK(sol.change_valuations[i] > sol.change_valuations[i - 1]);
    }
}

TEST_CASE("fixed point equals tree census and closed form") {
    const auto F = solve_funceq(10).F;
    CHECK(F == tree_census(10));
    CHECK(F == closed_form_F(10));
    CHECK(closed_form_residual(F).is_zero());
    const auto chk = verify_closedform_F(9);
    CHECK(chk.funceq_matches);
    CHECK(chk.residual_zero);
    CHECK(chk.specialization_ok);
    CHECK(chk.cyclic_invariant);
    CHECK(chk.transposition_invariant);
}

TEST_CASE("vortex pipeline") {
    const auto p = whirl_pipeline(20);
    CHECK(p.identity_ok);
    CHECK(p.radical_ok);
    CHECK_FALSE(p.printed_radical_is_series);
    const auto v = oracle::vortex_series(20);
    for (int k = 0; k <= 20; ++k) CHECK(p.V[k] == mpq_class(v[static_cast<std::size_t>(k)]));
    CHECK(p.P[5] == 1);
    CHECK(p.Z[5] == 68);
}

TEST_CASE("recurrence and offset") {
    const auto p = whirl_pipeline(60);
    CHECK(calibrate_recurrence_offset(p.V, 55) == std::vector<int>{1});
    const auto rec = vortex_recurrence(50);
    for (int n = 0; n <= 50; ++n) CHECK(mpq_class(rec[static_cast<std::size_t>(n)]) == p.V[n + 1]);
    // (2+4)*6 - 6*4*2 + 4*3*1 = 0
    CHECK(recurrence_residual({1, 2, 6}, 2) == 0);
}

TEST_CASE("asymptotic ratio") {
    const auto r100 = asymptotic_ratio(100);
    const auto r400 = asymptotic_ratio(400);
    CHECK(r100.lower <= r100.upper);
    CHECK(r100.lower < r400.lower);
    CHECK(r400.upper < 1);
    CHECK(r400.estimate == doctest::Approx(0.98).epsilon(0.02));
}
