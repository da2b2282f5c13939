#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tutteq/census.hpp"
#include "tutteq/holonomic.hpp"
#include "tutteq/parser.hpp"

using tq::AlgebraicEquation;
using tq::LinearODE;
using tq::PolyQ;
using tq::Rational;
using tq::Recurrence;
using tq::Series;

namespace {

Series geometric_series(int N) {
    Series s(N);
    for (int n = 0; n <= N; ++n) s.set_coeff(n, Rational(1));
    return s;
}

AlgebraicEquation eq_from(const std::string& text) {
    return AlgebraicEquation{tq::parse_expr(text, {"x", "y"})};
}

} // namespace

TEST_CASE("algebraic equation of 1/(1-x) gives a first-order ODE") {
    LinearODE ode = tq::algeq_to_ode(eq_from("(1 - x)*y - 1"));
    CHECK(ode.order() == 1);
    Series f = geometric_series(12);
    Series resid = tq::ode_apply(ode, f);
    for (int n = 0; n <= 11; ++n) CHECK(resid.coeff(n) == Rational(0));
    Recurrence rec = tq::ode_to_rec(ode);
    std::vector<Rational> ones(30, Rational(1));
    CHECK(!tq::rec_check(rec, ones, 0));
}

TEST_CASE("square root branch") {
    // y^2 = 1 - x, so a(n) = (-1)^n binomial(1/2, n)
    LinearODE ode = tq::algeq_to_ode(eq_from("y^2 - 1 + x"));
    CHECK(ode.order() == 1);
    Recurrence rec = tq::ode_to_rec(ode);
    std::vector<Rational> a{Rational(1)};
    Rational binom(1);
    for (int n = 0; n < 15; ++n) {
        binom *= (Rational(1, 2) - Rational(n)) / Rational(n + 1);
        a.push_back(binom * Rational(-1).pow(n + 1));
    }
    CHECK(!tq::rec_check(rec, a, rec.valid_from));
}

TEST_CASE("no y dependence is rejected") {
    CHECK_THROWS_AS(tq::algeq_to_ode(eq_from("x^2 - 1")), tq::degenerate_equation);
}

TEST_CASE("full pipeline on the built-in equation") {
    LinearODE ode = tq::algeq_to_ode(AlgebraicEquation{tq::quartic().P});
    CHECK(ode.order() <= 4);
    Series g = tq::tutte_series(60);
    Series resid = tq::ode_apply(ode, g);
    for (int n = 0; n + ode.order() <= 60; ++n) CHECK(resid.coeff(n) == Rational(0));

    Recurrence rec = tq::ode_to_rec(ode);
    std::vector<Rational> t;
    for (long n = 0; n <= 500; ++n) t.push_back(tq::tutte_coeff(n));
    CHECK(!tq::rec_check(rec, t, rec.valid_from));
}

TEST_CASE("hypergeometric term to first-order recurrence") {
    Recurrence rec = tq::hyperterm_to_rec(tq::tutte_ratio());
    CHECK(rec.order() == 1);
    std::vector<Rational> t;
    for (long n = 1; n <= 100; ++n) t.push_back(tq::tutte_coeff(n));
    // t[i] = a(1+i)
    std::vector<Rational> shifted(1, Rational(0));
    shifted.insert(shifted.end(), t.begin(), t.end());
    CHECK(!tq::rec_check(rec, shifted, 1));
    CHECK_THROWS_AS(tq::hyperterm_to_rec(tq::RatFun(0)), std::domain_error);
}

TEST_CASE("rec_check reports the first bad window") {
    // a(n+2) = a(n+1) + a(n)
    Recurrence fib{{PolyQ(1), PolyQ(1), PolyQ(-1)}, 0};
    std::vector<Rational> good{Rational(1), Rational(1), Rational(2), Rational(3),
                               Rational(5), Rational(8)};
    CHECK(!tq::rec_check(fib, good, 0));
    std::vector<Rational> bad = good;
    bad[4] = Rational(6);
    auto where = tq::rec_check(fib, bad, 0);
    REQUIRE(where);
    CHECK(*where == 2);
}

TEST_CASE("unrolling") {
    Recurrence doubling{{PolyQ(-2), PolyQ(1)}, 0};
    auto vals = tq::rec_unroll(doubling, {Rational(1)}, 0, 10);
    CHECK(vals.size() == 10);
    CHECK(vals[9] == Rational(512));
    CHECK_THROWS_AS(tq::rec_unroll(doubling, {}, 0, 5), std::invalid_argument);
    // leading coefficient with a zero in the window
    PolyQ n = PolyQ::variable();
    Recurrence stuck{{PolyQ(1), n - PolyQ(3)}, 0};
    CHECK_THROWS_AS(tq::rec_unroll(stuck, {Rational(1)}, 0, 10), std::domain_error);
}

TEST_CASE("canonical form of recurrences") {
    PolyQ n = PolyQ::variable();
    Recurrence a{{Rational(2) * n, PolyQ(4)}, 1};
    Recurrence b{{Rational(-3) * n, PolyQ(-6)}, 1};
    CHECK(a.same_canonical(b));
    Recurrence c{{Rational(2) * n, PolyQ(2)}, 1};
    CHECK(!a.same_canonical(c));
    // zero leading polynomial trimmed
    Recurrence padded{{n, PolyQ(1), PolyQ()}, 0};
    CHECK(padded.canonical().order() == 1);
    CHECK(!a.str().empty());
}
