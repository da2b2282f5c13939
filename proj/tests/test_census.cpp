#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tutteq/census.hpp"
#include "tutteq/report.hpp"

using tq::Rational;
using tq::Series;

namespace {

// direct factorial evaluation, independent of the term-ratio route
Rational coeff_oracle(long n) {
    if (n <= 0) return Rational(0);
    return Rational(2) * Rational::factorial(4 * n + 1) /
           (Rational::factorial(n + 1) * Rational::factorial(3 * n + 2));
}

// P(x, f(x)) as a truncated series
Series plug_into(const tq::BiPoly& P, const Series& f) {
    int N = f.order();
    std::vector<Series> pow{Series::one(N)};
    for (int d = 1; d <= P.degree_y(); ++d) pow.push_back(pow.back() * f);
    Series acc(N);
    for (const auto& [key, c] : P.terms()) {
        auto [dx, dy] = key;
        Series term(N);
        for (int n = dx; n <= N; ++n) term.set_coeff(n, pow[dy].coeff(n - dx) * c);
        acc = acc + term;
    }
    return acc;
}

} // namespace

TEST_CASE("first coefficients and support") {
    long expect[] = {1, 3, 13, 68, 399};
    for (long n = 1; n <= 5; ++n) CHECK(tq::tutte_coeff(n) == Rational(expect[n - 1]));
    CHECK(tq::tutte_coeff(0) == Rational(0));
    CHECK(tq::tutte_coeff(-4) == Rational(0));
}

TEST_CASE("term-ratio route equals the factorial formula") {
    for (long n = 1; n <= 300; ++n) CHECK(tq::tutte_coeff(n) == coeff_oracle(n));
}

TEST_CASE("consecutive-term ratio") {
    tq::RatFun r = tq::tutte_ratio();
    for (long n = 1; n <= 40; ++n)
        CHECK(r.eval(Rational(n)) == tq::tutte_coeff(n + 1) / tq::tutte_coeff(n));
}

TEST_CASE("series matches coefficients") {
    Series g = tq::tutte_series(30);
    CHECK(g.coeff(0) == Rational(0));
    for (int n = 1; n <= 30; ++n) CHECK(g.coeff(n) == tq::tutte_coeff(n));
}

TEST_CASE("power-coefficient ratios") {
    CHECK(tq::ratio_A(2, 3) == Rational(6, 13));
    CHECK(tq::ratio_A(2, 1) == Rational(0));
    tq::RatFun printed = tq::printed_ratio_formula(2);
    for (long n = 1; n <= 100; ++n)
        CHECK(tq::ratio_A(2, n) == printed.eval(Rational(n)));
    CHECK_THROWS_AS(tq::ratio_A(1, 5), std::domain_error);
    CHECK_THROWS_AS(tq::ratio_A(2, 0), std::domain_error);
}

TEST_CASE("closed form recovery for the square") {
    tq::RatioReport rep = tq::closed_form_A(2);
    REQUIRE(rep.formula);
    CHECK(*rep.formula == tq::printed_ratio_formula(2));
    REQUIRE(rep.limit);
    CHECK(*rep.limit == Rational(10, 27));
    CHECK(tq::limit_B(2) == Rational(10, 27));
}

TEST_CASE("the algebraic equation annihilates the series") {
    tq::QuarticEquation q = tq::quartic();
    CHECK(q.P.degree_y() == 4);
    CHECK(q.P.degree_x() == 3);
    CHECK(q.P.coeff(1, 0) == Rational(-1));
    CHECK(q.P.coeff(0, 1) == Rational(1));
    CHECK(q.P.coeff(2, 2) == Rational(17));
    CHECK(plug_into(q.P, tq::tutte_series(120)).is_zero());
}

TEST_CASE("roots of the equation at the critical point") {
    auto roots = tq::eval_quartic_at(Rational(27, 256));
    bool found = false;
    for (const auto& r : roots)
        if (r == Rational(5, 27)) found = true;
    CHECK(found);
    // generic points have no rational root
    CHECK(tq::eval_quartic_at(Rational(1, 3)).empty());
}

TEST_CASE("floating partial sum approaches the exact value") {
    double s = tq::g_partial_sum(27.0 / 256.0, 2000);
    CHECK(std::fabs(s - 5.0 / 27.0) < 1e-5);
}

TEST_CASE("floating cross-check of the published constant") {
    tq::CritiqueReport rep = tq::critique_check();
    CHECK(std::fabs(rep.jr_value - 1.253754) < 1e-5);
    CHECK(rep.jr_value > 1.0);
    CHECK(std::fabs(rep.jr_value - 10.0 / 27.0) > 0.5);
    CHECK(rep.c_value == doctest::Approx(10.0 / 27.0));
    CHECK(!rep.verdict.empty());
}

TEST_CASE("convolution term walks") {
    tq::HyperTerm2 term = tq::convolution_term();
    CHECK(term.compatible());
    CHECK(term.value(2, 1) == Rational(1));
    CHECK(term.value(5, 2) == Rational(3) * Rational(13));
    CHECK(term.value(5, 0) == Rational(0));
    CHECK(term.value(5, 5) == Rational(0));
    for (long n = 2; n <= 20; ++n)
        CHECK(term.sum(n) == tq::tutte_series(20).pow(2).coeff(static_cast<int>(n)));
}

TEST_CASE("limit table rows") {
    auto rows = tq::b_table(4, 10);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].r == 2);
    CHECK(rows[0].fraction == "10/27");
    CHECK(rows[0].decimal == "0.3703703704");
    CHECK(rows[2].fraction == "500/19683");
    auto rows3 = tq::b_table(2, 3);
    CHECK(rows3[0].decimal == "0.370");
}
