#ifndef TUTTEQ_TELESCOPE_HPP
#define TUTTEQ_TELESCOPE_HPP

#include <optional>
#include <string>

#include "tutteq/holonomic.hpp"

namespace tq {

/// Univariate hypergeometric term, represented by its consecutive-term
/// ratio t(k+1)/t(k).
struct HyperTerm1 {
    RatFun ratio;
};

/// Bivariate proper hypergeometric term F(n,k), represented by its shift
/// ratios (x = n, y = k in the BiRat slots) plus a support declaration and an
/// anchor value so concrete values can be recovered by ratio walks.
struct HyperTerm2 {
    BiRat ratio_n; // F(n+1,k)/F(n,k)
    BiRat ratio_k; // F(n,k+1)/F(n,k)

    // support: F(n,k) = 0 outside k_lo <= k <= n + k_hi_offset
    long k_lo = 0;
    long k_hi_offset = 0;
    std::string support_desc = "natural";

    // one concrete nonzero value, reachable from the whole support by walks
    long anchor_n = 0, anchor_k = 0;
    Rational anchor_value = Rational(1);

    /// Shift-compatibility: ratio_n(n,k+1)*ratio_k(n,k) = ratio_k(n+1,k)*ratio_n(n,k).
    bool compatible() const;

    /// Exact value by walking the ratios from the anchor (0 outside support).
    Rational value(long n, long k) const;

    /// S(n) = sum of F(n,k) over the declared support.
    Rational sum(long n) const;
};

/// Telescoping certificate: sum_i operator.coeffs[i](n) * F(n+i,k)
/// = G(n,k+1) - G(n,k) with G = R*F, as a rational-function identity.
struct Certificate {
    BiRat R;
    Recurrence op;
};

/// Indefinite summation: R(k) with R(k+1)*ratio(k) - R(k) = 1 when the term
/// has a hypergeometric antidifference; empty otherwise.
std::optional<RatFun> gosper(const HyperTerm1& term);

/// Creative telescoping: smallest order d <= max_order operator with
/// certificate, found by the parameterized indefinite-summation solve over
/// the field of rational functions of n.
std::optional<Certificate> zeilberger(const HyperTerm2& term, int max_order);

/// Exact symbolic check of the telescoping identity.
bool verify_certificate(const HyperTerm2& term, const Certificate& cert);

/// Applies the operator to the exactly-computed sums S(n) for n in
/// [n_lo, n_hi]; nullopt = all residuals zero, otherwise first failing n.
std::optional<long> numeric_sum_check(const HyperTerm2& term, const Recurrence& op,
                                      long n_lo, long n_hi);

/// Recurrence for the sum over the declared (finite) support, with boundary
/// effects folded in: when the telescoped operator leaves a nonzero but
/// hypergeometric residual on the true sums, one more order absorbs it.
/// The returned certificate satisfies verify_certificate, and the operator
/// passes numeric_sum_check on the supported sum.
std::optional<Certificate> sum_recurrence(const HyperTerm2& term, int max_order);

/// Same, starting from an already-computed telescoping certificate.
std::optional<Certificate> sum_recurrence(const HyperTerm2& term, const Certificate& base);

} // namespace tq

#endif
