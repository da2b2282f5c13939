#ifndef TUTTEQ_GUESS_HPP
#define TUTTEQ_GUESS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tutteq/holonomic.hpp"

namespace tq {

struct GuessConfig {
    int max_order = 4;
    int max_poly_degree = 12;
    int overdetermination_margin = 10;
    int holdout = 20;
};

/// Smallest (order, degree) linear recurrence with polynomial coefficients
/// annihilating the whole sequence (seq[i] = a(i)); graded search by
/// order + degree, then order. Candidates that fail any supplied data point
/// are discarded. Empty result = nothing found within bounds.
std::optional<Recurrence> guess_recurrence(const std::vector<Rational>& seq,
                                           const GuessConfig& cfg);

/// Minimal-degree rational function u(n)/v(n) matching all samples exactly,
/// with v nonzero at every sample point.
std::optional<RatFun> guess_ratfun_of_n(
    const std::vector<std::pair<Rational, Rational>>& samples, const GuessConfig& cfg);

/// Nonzero P(x,y) with deg_x, deg_y as bounded and P(x, series) = 0 through
/// the full truncation order. Among kernel candidates: minimal support,
/// tie-broken by graded-lex smallest leading monomial; canonical form.
std::optional<BiPoly> guess_algeq(const Series& series, int deg_y, int deg_x,
                                  const GuessConfig& cfg);

} // namespace tq

#endif
