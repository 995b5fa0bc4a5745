#include "doctest.h"
#include "oracles.hpp"
#include "rectlab/cases.hpp"
#include "rectlab/series.hpp"
#include "rectlab/table.hpp"
#include "rectlab/generators.hpp"

using namespace rectlab;

namespace {

bool equals(const QSeries& s, const oracle::Poly& p, int from, int to) {
    for (int k = from; k <= to; ++k) {
        if (s[k] != mpq_class(p[static_cast<std::size_t>(k)])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("series arithmetic") {
    const int N = 12;
    const QSeries t = QSeries::t(N);
    const QSeries one = QSeries::constant(1, N);
    const QSeries f = one + t + 3 * t * t;
    const QSeries g = one - 2 * t + t.pow(5);
    CHECK(((f * g) / g).agrees_with(f, N));
    CHECK((f.sqrt() * f.sqrt()).agrees_with(f, N));
    CHECK((one / (one - t))[N] == 1);
    CHECK(t.valuation() == 1);
    CHECK(QSeries(N).is_zero());
    CHECK(first_difference(f, g, N) == 1);
    CHECK(first_difference(f, f, N) == -1);
    CHECK_THROWS(t.inverse());
    CHECK_THROWS((2 * one).sqrt());
    CHECK((4 * t * t).sqrt()[1] == 2);
    CHECK(is_rational_square(mpq_class(9, 4)));
    CHECK(rational_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
}

TEST_CASE("division by t^k lowers the order") {
    const QSeries t = QSeries::t(10);
    const QSeries s = t * t + t.pow(3);
    const QSeries q = s / (t * t);
    CHECK(q.order() == 8);
    CHECK(q[0] == 1);
    CHECK(q[1] == 1);
    CHECK(s.shift_down(2).agrees_with(q, 8));
    CHECK_THROWS(t.shift_down(2));
}

TEST_CASE("catalan") {
    const QSeries c = catalan(15);
    CHECK(c.str(5) == "1,1,2,5,14,42");
    CHECK(equals(c, oracle::catalan_power_series(1, 15), 0, 15));
    CHECK(equals(c.pow(4), oracle::catalan_power_series(4, 15), 0, 15));
}

TEST_CASE("expression parsing") {
    const auto e = Expr::parse("(1 - t - sqrt(1 - 6*t + t^2)) / 2");
    std::vector<std::string> vars;
    e->collect_variables(vars);
    CHECK(vars == std::vector<std::string>{"t"});
    CHECK_THROWS_AS(Expr::parse("1 +"), ExprError);
    CHECK_THROWS_AS(Expr::parse("t^x"), ExprError);
    const auto s = expand_in_t(*e, 10);
    CHECK(equals(s, oracle::schroeder(10), 1, 10) == false);  // shifted: F = t + 2t^2 + ...
    for (int k = 1; k <= 10; ++k) CHECK(s[k] == mpq_class(oracle::schroeder(10)[static_cast<std::size_t>(k - 1)]));
    const auto inv = expand_in_t(*Expr::parse("(1 - (1 - t)^3) / t"), 6);
    CHECK(inv.order() == 6);
    CHECK(inv[0] == 3);
}

TEST_CASE("case 1 and case 10 systems") {
    const auto f1 = solve_system(find_case_spec(1), 12).F();
    for (int k = 1; k <= 12; ++k) CHECK(f1[k] == mpq_class(oracle::schroeder(12)[static_cast<std::size_t>(k - 1)]));
    const auto f10 = solve_system(find_case_spec(10), 12).F();
    CHECK(equals(f10, oracle::rational({0, 1, -2}, {1, -4, 2}, 12), 0, 12));
}

TEST_CASE("fixed-point iteration gains valuation each sweep") {
    const auto sol = solve_system(find_case_spec(7), 20);
    for (std::size_t i = 1; i < sol.change_valuations.size(); ++i) {
        CHECK(sol.change_valuations[i] > sol.change_valuations[i - 1]);
    }
    const auto bad = parse_cases("case 99\nrow 1234\neq A = A + t\neq D = A\neq F = t + A + D\nend\n");
    REQUIRE(bad.size() == 1);
    CHECK_THROWS_AS(solve_system(bad[0], 10), NonContraction);
}

TEST_CASE("case file parsing") {
    CHECK(bundled_cases().size() == 10);
    for (const auto& spec : bundled_cases()) {
        CHECK(spec.equations.back().unknown == "F");
        CHECK((spec.closed != nullptr) != (spec.poly != nullptr));
        CHECK(find_row(spec.row).case_number == spec.id);
    }
    CHECK(find_case_spec(3).poly_at_text == "1 + F");
    CHECK_FALSE(find_case_spec(7).printed.empty());
    CHECK_THROWS(parse_cases("case 1\neq A = (\nend\n"));
    CHECK_THROWS(find_case_spec(11));
}

TEST_CASE("theorem 1 at N = 20 and N-algebraic coefficients") {
    for (const auto& spec : bundled_cases()) {
        const auto chk = verify_theorem1(spec, 20);
        CHECK_MESSAGE(chk.ok, "case " << spec.id << " mismatch at " << chk.first_mismatch);
        for (int k = 0; k <= 20; ++k) {
            CHECK(chk.system[k].get_den() == 1);
            CHECK(chk.system[k] >= 0);
        }
    }
}

TEST_CASE("system counts equal bijective counts, n <= 8") {
    for (const auto& spec : bundled_cases()) {
        const auto F = solve_system(spec, 8).F();
        const auto& row = find_row(spec.row);
        for (int n = 1; n <= 8; ++n) {
            CHECK_MESSAGE(F[n] == mpq_class(static_cast<unsigned long>(count_class(n, row.avoided))),
                          "case " << spec.id << " n=" << n);
        }
    }
}

TEST_CASE("algebraic roots") {
    const auto c = algebraic_root(*Expr::parse("F^2 - F + t"), 12);
    const auto tc = QSeries::t(12) * catalan(12);
    CHECK(c.agrees_with(tc, 12));
    const auto cubic = algebraic_root(*find_case_spec(2).poly, 15);
    CHECK(cubic.agrees_with(solve_system(find_case_spec(2), 15).F(), 15));
    CHECK_THROWS_AS(algebraic_root(*Expr::parse("F^2 - t"), 5), std::domain_error);
}
