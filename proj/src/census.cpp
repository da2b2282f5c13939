#include "tutteq/census.hpp"

#include <cmath>

#include "tutteq/guess.hpp"

namespace tq {

RatFun tutte_ratio() {
    // t(n+1)/t(n) = (4n+5)(4n+4)(4n+3)(4n+2) / ((n+2)(3n+5)(3n+4)(3n+3))
    PolyQ n = PolyQ::variable();
    auto lin = [&](int a, int b) { return Rational(a) * n + PolyQ(Rational(b)); };
    PolyQ num = lin(4, 5) * lin(4, 4) * lin(4, 3) * lin(4, 2);
    PolyQ den = lin(1, 2) * lin(3, 5) * lin(3, 4) * lin(3, 3);
    return RatFun(num, den);
}

Rational tutte_coeff(long n) {
    if (n <= 0) return Rational(0);
    Rational t(1); // t(1)
    for (long m = 1; m < n; ++m)
        t *= Rational((4 * m + 5) * (4 * m + 4) * (4 * m + 3) * (4 * m + 2),
                      (m + 2) * (3 * m + 5) * (3 * m + 4) * (3 * m + 3));
    return t;
}

Series tutte_series(int N) {
    Series g(N);
    if (N >= 1) g.set_coeff(1, Rational(1));
    Rational t(1);
    for (long m = 1; m < N; ++m) {
        t *= Rational((4 * m + 5) * (4 * m + 4) * (4 * m + 3) * (4 * m + 2),
                      (m + 2) * (3 * m + 5) * (3 * m + 4) * (3 * m + 3));
        g.set_coeff(m + 1, t);
    }
    return g;
}

Rational ratio_A(int r, long n) {
    if (r < 2 || n < 1) throw std::domain_error("ratio_A: need r >= 2 and n >= 1");
    Series g = tutte_series(static_cast<int>(n));
    return g.pow(r).coeff(n) / tutte_coeff(n);
}

RatioReport closed_form_A(int r, int sample_count) {
    if (r < 2) throw std::domain_error("closed_form_A: need r >= 2");
    GuessConfig cfg;
    // numerator degree grows as 3(r-1); widen the search past the default
    cfg.max_poly_degree = std::max(12, 3 * (r - 1) + 2);
    if (sample_count <= 0)
        sample_count = 2 * (cfg.max_poly_degree + 1) + cfg.overdetermination_margin +
                       cfg.holdout + 10;

    Series g = tutte_series(sample_count);
    Series gr = g.pow(r);
    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(sample_count);
    Rational t(1);
    for (long n = 1; n <= sample_count; ++n) {
        if (n > 1)
            t *= Rational((4 * (n - 1) + 5) * (4 * (n - 1) + 4) * (4 * (n - 1) + 3) *
                              (4 * (n - 1) + 2),
                          (n + 1) * (3 * (n - 1) + 5) * (3 * (n - 1) + 4) * (3 * (n - 1) + 3));
        samples.emplace_back(Rational(n), gr.coeff(n) / t);
    }

    auto formula = guess_ratfun_of_n(samples, cfg);
    if (!formula)
        throw std::runtime_error("no rational function found within degree bounds");
    RatioReport rep;
    rep.r = r;
    rep.formula = *formula;
    if (formula->num().degree() == formula->den().degree())
        rep.limit = formula->num().leading() / formula->den().leading();
    return rep;
}

Rational limit_B(int r) {
    auto rep = closed_form_A(r);
    if (!rep.limit) throw std::runtime_error("limit_B: formula degrees do not match");
    return *rep.limit;
}

QuarticEquation quartic() {
    BiPoly P;
    auto add = [&](int dx, int dy, long c) { P.set(dx, dy, Rational(c)); };
    // x(x^2 + 11x - 1)
    add(3, 0, 1); add(2, 0, 11); add(1, 0, -1);
    // (4x^3 + 25x^2 - 14x + 1) y
    add(3, 1, 4); add(2, 1, 25); add(1, 1, -14); add(0, 1, 1);
    // x(6x^2 + 17x + 3) y^2
    add(3, 2, 6); add(2, 2, 17); add(1, 2, 3);
    // x^2(4x + 3) y^3
    add(3, 3, 4); add(2, 3, 3);
    // x^3 y^4
    add(3, 4, 1);
    return QuarticEquation{P.canonical()};
}

std::vector<Rational> eval_quartic_at(const Rational& x0) {
    PolyQ py = quartic().P.eval_x(x0); // polynomial in y
    return rational_roots(py);
}

double g_partial_sum(double x0, int terms) {
    double sum = 0, term = x0; // t(1) * x0^1
    for (long n = 1; n <= terms; ++n) {
        sum += term;
        double ratio = static_cast<double>((4 * n + 5)) * (4 * n + 4) * (4 * n + 3) *
                       (4 * n + 2) /
                       (static_cast<double>(n + 2) * (3 * n + 5) * (3 * n + 4) * (3 * n + 3));
        term *= ratio * x0;
    }
    return sum;
}

HyperTerm2 convolution_term() {
    RatFun rt = tutte_ratio();
    BiPoly n = BiPoly::var_x(), k = BiPoly::var_y();
    HyperTerm2 term;
    term.ratio_n = compose(rt, n - k);                           // t(n-k+1)/t(n-k)
    term.ratio_k = compose(rt, k) / compose(rt, n - k - BiPoly(1)); // t(k+1)t(n-k-1)/(t(k)t(n-k))
    term.k_lo = 1;
    term.k_hi_offset = -1;
    term.support_desc = "F(n,k) = 0 outside 1 <= k <= n-1";
    term.anchor_n = 2;
    term.anchor_k = 1;
    term.anchor_value = Rational(1); // t(1) t(1)
    return term;
}

RatFun printed_ratio_formula(int r) {
    PolyQ n = PolyQ::variable();
    auto lin = [&](int a, int b) { return Rational(a) * n + PolyQ(Rational(b)); };
    switch (r) {
    case 2:
        return RatFun(Rational(10) * lin(1, -1) *
                          PolyQ{Rational(12), Rational(14), Rational(1)},
                      Rational(3) * lin(3, 5) * lin(3, 4) * lin(1, 2));
    case 3:
        return RatFun(Rational(5) * lin(1, -1) * lin(1, -2) *
                          PolyQ{Rational(2016), Rational(3768), Rational(1803),
                                Rational(160), Rational(5)},
                      Rational(3) * lin(3, 8) * lin(3, 5) * lin(3, 7) * lin(3, 4) *
                          lin(1, 3) * lin(1, 2));
    case 4:
        return RatFun(Rational(20) * lin(1, -1) * lin(1, -2) * lin(1, -3) *
                          PolyQ{Rational(665280), Rational(1580304), Rational(1211092),
                                Rational(347406), Rational(31495), Rational(1350),
                                Rational(25)},
                      Rational(27) * lin(3, 11) * lin(3, 8) * lin(3, 5) * lin(3, 10) *
                          lin(3, 7) * lin(3, 4) * lin(1, 4) * lin(1, 3) * lin(1, 2));
    default:
        throw std::domain_error("printed_ratio_formula: only r = 2, 3, 4 are recorded");
    }
}

CritiqueReport critique_check() {
    CritiqueReport rep;
    const double pi = 3.14159265358979323846;
    double A = 5.0 / 27.0;
    double B = (16.0 / 27.0) * std::sqrt(3.0 / (2.0 * pi));
    rep.jr_value = (27.0 / 2.0) * std::sqrt(3.0 / 2.0) * A * B;
    rep.c_value = 10.0 / 27.0;
    rep.verdict =
        "JR value exceeds 1 and is irrational-valued expression; exact constant is 10/27";
    return rep;
}

} // namespace tq
