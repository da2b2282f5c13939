#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tutteq/linsolve.hpp"
#include "tutteq/ratfun.hpp"

using tq::RatFun;
using tq::Rational;
using tq::solve_linear_exact;

TEST_CASE("square nonsingular system") {
    std::vector<std::vector<Rational>> m = {{Rational(2), Rational(1)},
                                            {Rational(1), Rational(3)}};
    std::vector<Rational> rhs = {Rational(5), Rational(10)};
    auto sol = solve_linear_exact<Rational>(m, rhs);
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == Rational(1));
    CHECK(sol.particular[1] == Rational(3));
    CHECK(sol.nullspace.empty());
}

TEST_CASE("inconsistent system") {
    std::vector<std::vector<Rational>> m = {{Rational(1), Rational(1)},
                                            {Rational(2), Rational(2)}};
    std::vector<Rational> rhs = {Rational(1), Rational(3)};
    auto sol = solve_linear_exact<Rational>(m, rhs);
    CHECK(!sol.consistent);
}

TEST_CASE("underdetermined homogeneous system has a nullspace") {
    std::vector<std::vector<Rational>> m = {{Rational(1), Rational(2), Rational(3)}};
    auto sol = solve_linear_exact<Rational>(m);
    REQUIRE(sol.consistent);
    REQUIRE(sol.nullspace.size() == 2);
    for (const auto& v : sol.nullspace) {
        Rational acc(0);
        for (int i = 0; i < 3; ++i) acc += m[0][i] * v[i];
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("ragged matrix rejected") {
    std::vector<std::vector<Rational>> m = {{Rational(1)}, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(solve_linear_exact<Rational>(m), tq::dimension_error);
}

TEST_CASE("solve over a rational function field") {
    tq::PolyQ n = tq::PolyQ::variable();
    // [ n  1 ] [a]   [ n+1 ]
    // [ 1  n ] [b] = [ n+1 ]  => a = b = 1 for generic n
    std::vector<std::vector<RatFun>> m = {{RatFun(n), RatFun(1)}, {RatFun(1), RatFun(n)}};
    std::vector<RatFun> rhs = {RatFun(n + tq::PolyQ(1)), RatFun(n + tq::PolyQ(1))};
    auto sol = solve_linear_exact<RatFun>(m, rhs);
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == RatFun(1));
    CHECK(sol.particular[1] == RatFun(1));
}

TEST_CASE("random consistency: A * x = b reproduced") {
    // deterministic pseudo-random small matrix
    unsigned long seed = 12345;
    auto next = [&] {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((seed >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t nr = 4, nc = 3;
        std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(nc));
        std::vector<Rational> x(nc), b(nr, Rational(0));
        for (auto& xi : x) xi = Rational(next());
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) {
                m[i][j] = Rational(next());
                b[i] += m[i][j] * x[j];
            }
        auto sol = solve_linear_exact<Rational>(m, b);
        REQUIRE(sol.consistent);
        // particular solution must satisfy the system
        for (std::size_t i = 0; i < nr; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < nc; ++j) acc += m[i][j] * sol.particular[j];
            CHECK(acc == b[i]);
        }
    }
}
