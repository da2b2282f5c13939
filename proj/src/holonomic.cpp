#include "tutteq/holonomic.hpp"

#include <sstream>

#include "tutteq/linsolve.hpp"
#include "tutteq/parser.hpp"

namespace tq {

namespace {

RatFun deriv(const RatFun& f) {
    return RatFun(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                  f.den() * f.den());
}

// d/dx applied coefficientwise to an element of Q(x)[y].
PolyK deriv_coeffs(const PolyK& a) {
    std::vector<RatFun> cs(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : cs) c = deriv(c);
    return PolyK(std::move(cs));
}

/// Scale a list of Q-polynomials to a shared canonical form: integer
/// coefficients, joint content 1, and positive leading coefficient on
/// polys[pivot].
void normalize_poly_list(std::vector<PolyQ>& polys, std::size_t pivot) {
    mpz_class den(1);
    for (const auto& p : polys)
        for (const auto& c : p.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content(0);
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) {
            mpz_class z = c.num() * (den / c.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        }
    if (content == 0) return;
    Rational factor(content, den);
    if (polys[pivot].leading().sign() < 0) factor = -factor;
    for (auto& p : polys) p = p * factor.inverse();
}

std::vector<PolyQ> clear_ratfun_list(const std::vector<RatFun>& v) {
    PolyQ l(1);
    for (const auto& f : v) l = PolyQ::lcm(l, f.den());
    std::vector<PolyQ> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.num() * PolyQ::exact_div(l, f.den()));
    return out;
}

} // namespace

Recurrence Recurrence::canonical() const {
    Recurrence r(*this);
    // drop identically-zero extremes; a zero low end is a shifted recurrence
    while (r.coeffs.size() > 1 && r.coeffs.back().is_zero()) r.coeffs.pop_back();
    while (r.coeffs.size() > 1 && r.coeffs.front().is_zero()) {
        r.coeffs.erase(r.coeffs.begin());
        for (auto& p : r.coeffs) p = p.taylor_shift(Rational(-1));
        r.valid_from += 1;
    }
    normalize_poly_list(r.coeffs, r.coeffs.size() - 1);
    return r;
}

bool Recurrence::same_canonical(const Recurrence& o) const {
    return canonical().coeffs == o.canonical().coeffs;
}

std::string Recurrence::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << print_poly(coeffs[i], "n") << ")*a(n";
        if (i > 0) os << "+" << i;
        os << ")";
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

LinearODE algeq_to_ode(const AlgebraicEquation& eq) {
    PolyK P = squarefree_part(eq.P.as_poly_in_y());
    int d = P.degree();
    if (d < 1) throw degenerate_equation("equation has no y dependence");
    PolyK Py = P.derivative();
    auto [g, s, t] = PolyK::ext_gcd(Py % P, P);
    if (g.degree() != 0)
        throw degenerate_equation("degenerate equation: dP/dy not invertible");
    PolyK Py_inv = (s * (RatFun(1) / g.coeff(0))) % P;
    PolyK Px = deriv_coeffs(P);
    PolyK yprime = ((-Px) * Py_inv) % P;

    // derivative of an element A of Q(x)[y]/(P): A_x + A_y * y'
    auto ddx = [&](const PolyK& a) {
        return (deriv_coeffs(a) + a.derivative() * yprime) % P;
    };

    std::vector<PolyK> vecs{PolyK::variable() % P}; // the root itself
    for (int k = 1; k <= d; ++k) {
        vecs.push_back(ddx(vecs.back()));
        // dependence test on vecs[0..k] over the basis 1..y^(d-1)
        std::vector<std::vector<RatFun>> m(d, std::vector<RatFun>(k + 1, RatFun(0)));
        for (int j = 0; j <= k; ++j)
            for (int b = 0; b < d; ++b) m[b][j] = vecs[j].coeff(b);
        auto sol = solve_linear_exact<RatFun>(m);
        if (!sol.nullspace.empty()) {
            LinearODE ode;
            ode.coeffs = clear_ratfun_list(sol.nullspace.front());
            while (ode.coeffs.size() > 1 && ode.coeffs.back().is_zero())
                ode.coeffs.pop_back();
            normalize_poly_list(ode.coeffs, ode.coeffs.size() - 1);
            return ode;
        }
    }
    throw degenerate_equation("no linear dependence up to the y-degree"); // unreachable
}

Recurrence ode_to_rec(const LinearODE& ode) {
    // x^i * f^(j) contributes weight (n-i+j)(n-i+j-1)...(n-i+1) on a(n-i+j),
    // i.e. shift s = j - i carries the falling factorial in n.
    int smin = 0, smax = 0;
    for (int j = 0; j < static_cast<int>(ode.coeffs.size()); ++j) {
        const PolyQ& c = ode.coeffs[j];
        for (int i = 0; i <= c.degree(); ++i) {
            if (c.coeff(i).is_zero()) continue;
            smin = std::min(smin, j - i);
            smax = std::max(smax, j - i);
        }
    }
    std::vector<PolyQ> q(smax - smin + 1); // q[s - smin](n), equation at [x^n]
    PolyQ n_var = PolyQ::variable();
    for (int j = 0; j < static_cast<int>(ode.coeffs.size()); ++j) {
        const PolyQ& c = ode.coeffs[j];
        for (int i = 0; i <= c.degree(); ++i) {
            if (c.coeff(i).is_zero()) continue;
            PolyQ w(1);
            for (int m = 1; m <= j; ++m) w *= n_var + PolyQ(Rational(m - i));
            q[j - i - smin] += w * c.coeff(i);
        }
    }
    // re-index so the recurrence reads sum_u p_u(N) a(N+u), N = n + smin
    Recurrence rec;
    rec.coeffs.reserve(q.size());
    for (auto& p : q) rec.coeffs.push_back(p.taylor_shift(Rational(-smin)));
    rec.valid_from = std::max(0, smin);
    return rec.canonical();
}

std::optional<long> rec_check(const Recurrence& rec, const std::vector<Rational>& seq,
                              long from) {
    long start = std::max(from, rec.valid_from);
    long d = rec.order();
    if (start + d >= static_cast<long>(seq.size()))
        throw std::out_of_range("rec_check: window longer than sequence");
    for (long n = start; n + d < static_cast<long>(seq.size()); ++n) {
        Rational acc(0);
        for (long i = 0; i <= d; ++i)
            acc += rec.coeffs[i].eval(Rational(n)) * seq[n + i];
        if (!acc.is_zero()) return n;
    }
    return std::nullopt;
}

Recurrence hyperterm_to_rec(const RatFun& ratio) {
    if (ratio.is_zero()) throw std::domain_error("hyperterm_to_rec: zero ratio");
    Recurrence rec;
    rec.coeffs = {-ratio.num(), ratio.den()};
    rec.valid_from = 0;
    return rec.canonical();
}

std::vector<Rational> rec_unroll(const Recurrence& rec, std::vector<Rational> initial,
                                 long start, std::size_t N) {
    std::size_t d = rec.order();
    if (initial.size() < d)
        throw std::invalid_argument("rec_unroll: need at least `order` initial values");
    while (initial.size() < N) {
        long n = start + static_cast<long>(initial.size()) - static_cast<long>(d);
        if (n < rec.valid_from)
            throw std::invalid_argument("rec_unroll: window starts before valid_from");
        Rational lead = rec.coeffs[d].eval(Rational(n));
        if (lead.is_zero())
            throw std::domain_error("rec_unroll: leading coefficient vanishes at n=" +
                                    std::to_string(n));
        Rational acc(0);
        for (std::size_t i = 0; i < d; ++i)
            acc += rec.coeffs[i].eval(Rational(n)) * initial[initial.size() - d + i];
        initial.push_back(-acc / lead);
    }
    initial.resize(N);
    return initial;
}

Series ode_apply(const LinearODE& ode, const Series& f) {
    int N = f.order();
    auto poly_to_series = [N](const PolyQ& p) {
        Series s(N);
        for (int i = 0; i <= std::min(N, p.degree()); ++i) s.set_coeff(i, p.coeff(i));
        return s;
    };
    auto derivative = [N](const Series& s) {
        Series r(N);
        for (int i = 0; i < N; ++i) r.set_coeff(i, s.coeff(i + 1) * Rational(i + 1));
        return r;
    };
    Series acc(N), df = f;
    for (std::size_t j = 0; j < ode.coeffs.size(); ++j) {
        if (j > 0) df = derivative(df);
        if (!ode.coeffs[j].is_zero()) acc = acc + poly_to_series(ode.coeffs[j]) * df;
    }
    return acc;
}

} // namespace tq
