#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tutteq/poly.hpp"
#include "tutteq/ratfun.hpp"

using tq::PolyQ;
using tq::RatFun;
using tq::Rational;

TEST_CASE("basic polynomial arithmetic") {
    PolyQ x = PolyQ::variable();
    PolyQ p = x * x + 2 * x + PolyQ(1);
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == Rational(16));
    CHECK((x + PolyQ(1)) * (x + PolyQ(1)) == p);
    CHECK(p - p == PolyQ());
    CHECK(PolyQ().is_zero());
    CHECK((p * PolyQ()).is_zero());
}

TEST_CASE("division, gcd, lcm") {
    PolyQ x = PolyQ::variable();
    PolyQ a = (x - PolyQ(1)) * (x - PolyQ(2)) * (x - PolyQ(3));
    PolyQ b = (x - PolyQ(2)) * (x - PolyQ(4));
    auto [q, r] = PolyQ::divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(PolyQ::gcd(a, b) == (x - PolyQ(2)));
    CHECK(PolyQ::lcm(a, b) == ((x - PolyQ(1)) * (x - PolyQ(2)) * (x - PolyQ(3)) * (x - PolyQ(4))));
    CHECK_THROWS_AS(PolyQ::exact_div(a, x - PolyQ(5)), std::domain_error);
    auto [g, s, t] = PolyQ::ext_gcd(a, b);
    CHECK(s * a + t * b == g);
    CHECK(g == x - PolyQ(2));
}

TEST_CASE("derivative and shift") {
    PolyQ x = PolyQ::variable();
    PolyQ p = x * x * x - 2 * x + PolyQ(7);
    CHECK(p.derivative() == 3 * x * x - PolyQ(2));
    PolyQ sh = p.taylor_shift(Rational(1)); // p(x+1)
    CHECK(sh.eval(Rational(2)) == p.eval(Rational(3)));
    CHECK(p.taylor_shift(Rational(0)) == p);
}

TEST_CASE("primitive part and content") {
    PolyQ x = PolyQ::variable();
    PolyQ p = Rational(4, 6) * x * x + Rational(8, 3) * x;
    Rational scale;
    PolyQ prim = tq::primitive_part(p, &scale);
    CHECK(prim == (x * x + 4 * x));
    CHECK(prim * scale == p);
    // sign fixed by leading coefficient
    PolyQ n = tq::primitive_part(-p);
    CHECK(n.leading() > Rational(0));
}

TEST_CASE("rational roots by divisor search") {
    PolyQ x = PolyQ::variable();
    // roots 2/3, -5, 0
    PolyQ p = x * (3 * x - PolyQ(2)) * (x + PolyQ(5));
    auto roots = tq::rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-5));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(2, 3));
    auto nn = tq::nonneg_integer_roots((x - PolyQ(7)) * (x + PolyQ(2)) * x);
    REQUIRE(nn.size() == 2);
    CHECK(nn[0] == 0);
    CHECK(nn[1] == 7);
    // no rational roots
    CHECK(tq::rational_roots(x * x + PolyQ(1)).empty());
    // large composite coefficients exercise the factorizer
    PolyQ big = (x - PolyQ(Rational(1000003))) * (x - PolyQ(Rational(999983)));
    auto r2 = tq::rational_roots(big);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(999983));
}

TEST_CASE("squarefree part") {
    PolyQ x = PolyQ::variable();
    PolyQ p = (x - PolyQ(1)) * (x - PolyQ(1)) * (x + PolyQ(2));
    PolyQ sf = tq::squarefree_part(p);
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rational(1)) == Rational(0));
    CHECK(sf.eval(Rational(-2)) == Rational(0));
}

TEST_CASE("rational functions reduce and normalize") {
    PolyQ x = PolyQ::variable();
    RatFun f(x * x - PolyQ(1), x - PolyQ(1)); // (x^2-1)/(x-1) = x+1
    CHECK(f.is_polynomial());
    CHECK(f.num() == x + PolyQ(1));
    RatFun g(2 * x, 4 * x * x); // = (1/2)/x after monic normalization
    CHECK(g.den() == x);
    CHECK(g.num() == PolyQ(Rational(1, 2)));
    CHECK(f + g - g == f);
    CHECK((g * g.inverse()) == RatFun(1));
    CHECK_THROWS_AS(g.eval(Rational(0)), tq::pole_error);
    CHECK(f.shift(Rational(2)).eval(Rational(1)) == f.eval(Rational(3)));
}
