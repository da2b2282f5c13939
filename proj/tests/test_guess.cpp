#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tutteq/census.hpp"
#include "tutteq/guess.hpp"
#include "tutteq/parser.hpp"

using tq::GuessConfig;
using tq::PolyQ;
using tq::Rational;
using tq::Recurrence;

TEST_CASE("factorials") {
    std::vector<Rational> fac{Rational(1)};
    for (int n = 1; n <= 60; ++n) fac.push_back(fac.back() * Rational(n));
    GuessConfig cfg;
    auto rec = tq::guess_recurrence(fac, cfg);
    REQUIRE(rec);
    CHECK(rec->order() == 1);
    Recurrence expect{{tq::parse_poly("-n - 1", "n"), PolyQ(1)}, 0};
    CHECK(rec->same_canonical(expect));
}

TEST_CASE("constant coefficients") {
    std::vector<Rational> fib{Rational(0), Rational(1)};
    for (int n = 2; n <= 70; ++n) fib.push_back(fib[n - 1] + fib[n - 2]);
    GuessConfig cfg;
    auto rec = tq::guess_recurrence(fib, cfg);
    REQUIRE(rec);
    CHECK(rec->order() == 2);
    CHECK(!tq::rec_check(*rec, fib, 0));
}

TEST_CASE("planted recurrences are recovered and never fail held-out data") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 6; ++trial) {
        // random order-2 recurrence with degree-1 coefficients, nonvanishing lead
        PolyQ n = PolyQ::variable();
        PolyQ p0 = Rational(coeff(rng)) * n + PolyQ(Rational(coeff(rng)));
        PolyQ p1 = Rational(coeff(rng)) * n + PolyQ(Rational(coeff(rng)));
        if (p0.is_zero()) p0 = PolyQ(1);
        std::vector<Rational> a{Rational(1 + trial), Rational(coeff(rng))};
        for (int m = 0; m + 2 < 90; ++m) {
            // lead coefficient fixed to n + 7 so unrolling never divides by zero
            Rational lead = Rational(m + 7);
            a.push_back(-(p0.eval(Rational(m)) * a[m] + p1.eval(Rational(m)) * a[m + 1]) /
                        lead);
        }
        GuessConfig cfg;
        auto rec = tq::guess_recurrence(a, cfg);
        REQUIRE(rec);
        CHECK(rec->order() <= 2);
        CHECK(!tq::rec_check(*rec, a, rec->valid_from));
    }
}

TEST_CASE("sequences without small recurrences are rejected") {
    std::vector<Rational> primes;
    for (int p : {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                  53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
                  113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
                  181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241,
                  251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313})
        primes.push_back(Rational(p));
    GuessConfig cfg;
    cfg.max_order = 3;
    cfg.max_poly_degree = 4;
    CHECK(!tq::guess_recurrence(primes, cfg));
}

TEST_CASE("rational function fitting") {
    tq::RatFun target = tq::parse_ratfun("(3*n^2 + 1)/(n + 2)", "n");
    std::vector<std::pair<Rational, Rational>> samples;
    for (long n = 1; n <= 40; ++n)
        samples.emplace_back(Rational(n), target.eval(Rational(n)));
    GuessConfig cfg;
    auto got = tq::guess_ratfun_of_n(samples, cfg);
    REQUIRE(got);
    CHECK(*got == target);
    // inconsistent data has no rational interpolant of low degree
    samples[20].second += Rational(1);
    CHECK(!tq::guess_ratfun_of_n(samples, cfg));
}

TEST_CASE("algebraic equation of the geometric series") {
    tq::Series s(40);
    for (int n = 0; n <= 40; ++n) s.set_coeff(n, Rational(1));
    GuessConfig cfg;
    auto P = tq::guess_algeq(s, 1, 1, cfg);
    REQUIRE(P);
    CHECK(*P == tq::parse_expr("y - x*y - 1", {"x", "y"}).canonical());
}

TEST_CASE("algebraic equation of the Catalan series") {
    tq::Series c(40);
    Rational cat(1);
    c.set_coeff(0, cat);
    for (int n = 0; n < 40; ++n) {
        cat *= Rational(2 * (2 * n + 1), n + 2);
        c.set_coeff(n + 1, cat);
    }
    GuessConfig cfg;
    auto P = tq::guess_algeq(c, 2, 1, cfg);
    REQUIRE(P);
    CHECK(*P == tq::parse_expr("x*y^2 - y + 1", {"x", "y"}).canonical());
}

TEST_CASE("recovering the built-in quartic") {
    auto P = tq::guess_algeq(tq::tutte_series(60), 4, 3, GuessConfig{});
    REQUIRE(P);
    CHECK(*P == tq::quartic().P);
}

TEST_CASE("guessed ratio formula agrees with the first-order route") {
    // A_2 samples produce the same recurrence for t as the direct term ratio
    auto rep = tq::closed_form_A(2);
    REQUIRE(rep.formula);
    Recurrence via_ratio = tq::hyperterm_to_rec(tq::tutte_ratio());
    std::vector<Rational> t;
    for (long n = 0; n <= 80; ++n) t.push_back(tq::tutte_coeff(n));
    auto guessed = tq::guess_recurrence(std::vector<Rational>(t.begin() + 1, t.end()),
                                        GuessConfig{});
    REQUIRE(guessed);
    CHECK(guessed->order() == 1);
}
