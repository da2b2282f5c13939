#ifndef TUTTEQ_HOLONOMIC_HPP
#define TUTTEQ_HOLONOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "tutteq/bipoly.hpp"
#include "tutteq/series.hpp"

namespace tq {

/// Homogeneous linear ODE sum_j coeff[j](x) * f^(j)(x) = 0.
struct LinearODE {
    std::vector<PolyQ> coeffs; // index j = coefficient of the j-th derivative

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Linear recurrence sum_i coeff[i](n) * a(n+i) = 0, valid for n >= valid_from.
struct Recurrence {
    std::vector<PolyQ> coeffs; // index i = coefficient of a(n+i)
    long valid_from = 0;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Integer-cleared, content-free, sign fixed by the leading polynomial's
    /// leading coefficient; trailing/leading zero polynomials trimmed with
    /// shifts folded into valid_from.
    Recurrence canonical() const;

    bool same_canonical(const Recurrence& o) const;

    std::string str() const; // human-readable, a(n+i) notation
};

/// P(x, y) with deg_y >= 1 whose root series is the function of interest.
struct AlgebraicEquation {
    BiPoly P;
};

struct degenerate_equation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimal-order homogeneous linear ODE annihilating every root of the
/// squarefree part of eq.P, via derivatives in Q(x)[y]/(P).
LinearODE algeq_to_ode(const AlgebraicEquation& eq);

/// Coefficient recurrence of the series solutions of the ODE.
Recurrence ode_to_rec(const LinearODE& ode);

/// Applies the recurrence to seq (seq[i] = a(i)) for every admissible window
/// with n >= max(from, valid_from); nullopt = all residuals zero, otherwise
/// the first failing n.
std::optional<long> rec_check(const Recurrence& rec, const std::vector<Rational>& seq,
                              long from);

/// First-order recurrence den(n)*a(n+1) - num(n)*a(n) = 0 for a hypergeometric
/// term with the given consecutive-term ratio.
Recurrence hyperterm_to_rec(const RatFun& ratio);

/// Extend `initial` (aligned so initial[0] = a(start)) to length N by solving
/// for the top term. Throws if a leading coefficient vanishes on the way or
/// there are fewer initial values than the order.
std::vector<Rational> rec_unroll(const Recurrence& rec, std::vector<Rational> initial,
                                 long start, std::size_t N);

/// Apply the ODE to a truncated series; coefficients of the result are exact
/// up to order - ode.order() (differentiation loses top coefficients).
Series ode_apply(const LinearODE& ode, const Series& f);

} // namespace tq

#endif
