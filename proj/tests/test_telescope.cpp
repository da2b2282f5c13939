#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tutteq/census.hpp"
#include "tutteq/parser.hpp"
#include "tutteq/telescope.hpp"

using tq::BiPoly;
using tq::BiRat;
using tq::HyperTerm1;
using tq::HyperTerm2;
using tq::RatFun;
using tq::Rational;

namespace {

bool antidifference_ok(const RatFun& R, const RatFun& ratio) {
    return R.shift(Rational(1)) * ratio - R == RatFun(1);
}

HyperTerm2 binomial_term() {
    BiPoly n = BiPoly::var_x(), k = BiPoly::var_y(), one(1);
    HyperTerm2 t;
    t.ratio_n = BiRat(n + one, n + one - k);
    t.ratio_k = BiRat(n - k, k + one);
    t.k_lo = 0;
    t.k_hi_offset = 0;
    t.anchor_n = 0;
    t.anchor_k = 0;
    t.anchor_value = Rational(1);
    return t;
}

} // namespace

TEST_CASE("indefinite summation corpus") {
    // t(k) = k*k!  =>  R = 1/k
    auto r1 = tq::gosper({tq::parse_ratfun("((k + 1)^2)/(k)", "k")});
    REQUIRE(r1);
    CHECK(*r1 == tq::parse_ratfun("(1)/(k)", "k"));
    // t(k) = k  =>  R = (k-1)/2
    auto r2 = tq::gosper({tq::parse_ratfun("(k + 1)/(k)", "k")});
    REQUIRE(r2);
    CHECK(*r2 == tq::parse_ratfun("(k - 1)/(2)", "k"));
    // t(k) = k!  =>  not Gosper-summable
    CHECK(!tq::gosper({tq::parse_ratfun("k + 1", "k")}));
    // t(k) = 1/(k(k+1)) telescopes
    auto r4 = tq::gosper({tq::parse_ratfun("(k)/(k + 2)", "k")});
    REQUIRE(r4);
    CHECK(antidifference_ok(*r4, tq::parse_ratfun("(k)/(k + 2)", "k")));
    // constant ratio 2 (geometric): R = 1
    auto r5 = tq::gosper({RatFun(tq::PolyQ(2))});
    REQUIRE(r5);
    CHECK(antidifference_ok(*r5, RatFun(tq::PolyQ(2))));
}

TEST_CASE("binomial row sums") {
    HyperTerm2 term = binomial_term();
    REQUIRE(term.compatible());
    CHECK(term.value(4, 2) == Rational(6));
    CHECK(term.sum(5) == Rational(32));
    auto cert = tq::zeilberger(term, 3);
    REQUIRE(cert);
    CHECK(cert->op.order() == 1);
    tq::Recurrence expect{{tq::PolyQ(-2), tq::PolyQ(1)}, 0};
    CHECK(cert->op.same_canonical(expect));
    CHECK(tq::verify_certificate(term, *cert));
    CHECK(!tq::numeric_sum_check(term, cert->op, 0, 30));
    // a perturbed certificate is rejected
    tq::Certificate broken = *cert;
    broken.R = broken.R + BiRat(Rational(1));
    CHECK(!tq::verify_certificate(term, broken));
}

TEST_CASE("incompatible ratios are rejected") {
    HyperTerm2 term = binomial_term();
    term.ratio_n = term.ratio_n * BiRat(BiPoly::var_y() + BiPoly(1));
    CHECK_THROWS_AS(tq::zeilberger(term, 2), std::invalid_argument);
}

TEST_CASE("telescoping the convolution term") {
    HyperTerm2 term = tq::convolution_term();
    auto cert = tq::zeilberger(term, 4);
    REQUIRE(cert);
    CHECK(cert->op.order() == 2);
    CHECK(tq::verify_certificate(term, *cert));

    // the telescoped operator leaves a boundary residual on the supported sums
    CHECK(tq::numeric_sum_check(term, cert->op, 3, 40));

    // one more order absorbs it
    auto sum = tq::sum_recurrence(term, *cert);
    REQUIRE(sum);
    CHECK(sum->op.order() == 3);
    CHECK(tq::verify_certificate(term, *sum));
    CHECK(!tq::numeric_sum_check(term, sum->op, 3, 80));

    // the corrected operator annihilates t(n) A_2(n) as well
    RatFun a2 = tq::printed_ratio_formula(2);
    for (long n = std::max(sum->op.valid_from, 2L); n <= 40; ++n) {
        Rational resid(0);
        for (long i = 0; i <= sum->op.order(); ++i)
            resid += sum->op.coeffs[i].eval(Rational(n)) * tq::tutte_coeff(n + i) *
                     a2.eval(Rational(n + i));
        CHECK(resid == Rational(0));
    }

    // unrolling from the first two sums reproduces the convolution values
    auto vals = tq::rec_unroll(sum->op,
                               {term.sum(2), term.sum(3), term.sum(4)}, 2, 8);
    CHECK(vals[0] == Rational(1));
    CHECK(vals[1] == Rational(6));
    CHECK(vals[2] == Rational(35));
    CHECK(vals[3] == Rational(214));
}

TEST_CASE("sum_recurrence keeps an operator that already works") {
    HyperTerm2 term = binomial_term();
    auto sum = tq::sum_recurrence(term, 3);
    REQUIRE(sum);
    CHECK(sum->op.order() == 1);
    CHECK(!tq::numeric_sum_check(term, sum->op, 0, 40));
}
