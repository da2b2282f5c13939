#ifndef TUTTEQ_CENSUS_HPP
#define TUTTEQ_CENSUS_HPP

#include <optional>
#include <string>

#include "tutteq/holonomic.hpp"
#include "tutteq/series.hpp"
#include "tutteq/telescope.hpp"

namespace tq {

/// Number of rooted planar triangulations, 2(4n+1)!/((n+1)!(3n+2)!) for
/// n >= 1 and 0 for n <= 0, computed by the first-order term-ratio
/// recurrence (no factorials).
Rational tutte_coeff(long n);

/// Consecutive-term ratio t(n+1)/t(n) as a rational function of n.
RatFun tutte_ratio();

/// The generating series g(x), coefficients tutte_coeff(0..N).
Series tutte_series(int N);

/// A_r(n) = [x^n] g^r / [x^n] g, exact.
Rational ratio_A(int r, long n);

struct RatioReport {
    int r = 0;
    std::optional<RatFun> formula; // A_r as a rational function of n
    std::optional<Rational> limit; // leading-coefficient ratio when degrees match
};

/// Recover A_r(n) in closed form by rational-function guessing over exact
/// samples n = 1..sample_count (0 = pick automatically), verified on a
/// held-out window. Throws if no formula is found within degree bounds.
RatioReport closed_form_A(int r, int sample_count = 0);

/// B_r = lim A_r(n).
Rational limit_B(int r);

struct QuarticEquation {
    BiPoly P; // P(x, y), degree 4 in y
};

/// The algebraic equation satisfied by g, canonical integer form.
QuarticEquation quartic();

/// Rational roots in y of P(x0, y).
std::vector<Rational> eval_quartic_at(const Rational& x0);

/// Floating partial sum sum_{n=1}^{terms} t(n) x0^n.
double g_partial_sum(double x0, int terms);

struct CritiqueReport {
    double jr_value = 0;  // (27/2) sqrt(3/2) * (5/27) * (16/27) sqrt(3/(2 pi))
    double c_value = 0;   // 10/27
    std::string verdict;
};

CritiqueReport critique_check();

/// The bivariate term F(n,k) = t(k) t(n-k) behind [x^n] g^2, with support
/// 1 <= k <= n-1 and anchor F(2,1) = 1.
HyperTerm2 convolution_term();

/// The printed closed forms of A_r(n) for r = 2, 3, 4 (reference data for
/// cross-checks against the recovered formulas).
RatFun printed_ratio_formula(int r);

} // namespace tq

#endif
