#include "tutteq/telescope.hpp"

#include <algorithm>

#include "tutteq/guess.hpp"
#include "tutteq/linsolve.hpp"

namespace tq {

namespace {

// ---- resultants and integer-shift detection -------------------------------

Rational resultant(PolyQ f, PolyQ g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    Rational res(1);
    bool neg = false;
    while (true) {
        int df = f.degree(), dg = g.degree();
        if (dg == 0) {
            res *= g.coeff(0).pow(df);
            break;
        }
        PolyQ r = f % g;
        if (r.is_zero()) return Rational(0);
        if ((df & 1) && (dg & 1)) neg = !neg;
        res *= g.leading().pow(df - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
    return neg ? -res : res;
}

PolyQ lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    PolyQ acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        PolyQ li(1);
        Rational denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            li *= PolyQ{-pts[j].first, Rational(1)};
            denom *= pts[i].first - pts[j].first;
        }
        acc += li * (pts[i].second / denom);
    }
    return acc;
}

// nonnegative integers j with deg gcd(a(k), b(k+j)) > 0 — candidates from the
// interpolated resultant in j, to be confirmed by the caller's exact gcd
std::vector<long> shift_candidates(const PolyQ& a, const PolyQ& b) {
    if (a.degree() <= 0 || b.degree() <= 0) return {};
    int D = a.degree() * b.degree();
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(D + 1);
    for (int j0 = 0; j0 <= D; ++j0)
        pts.emplace_back(Rational(j0), resultant(a, b.taylor_shift(Rational(j0))));
    return nonneg_integer_roots(lagrange_interpolate(pts));
}

std::vector<long> confirmed_shifts(const PolyQ& a, const PolyQ& b) {
    std::vector<long> out;
    for (long j : shift_candidates(a, b))
        if (PolyQ::gcd(a, b.taylor_shift(Rational(j))).degree() > 0) out.push_back(j);
    return out;
}

PolyQ specialize(const PolyK& p, const Rational& n0) {
    std::vector<Rational> cs;
    cs.reserve(p.degree() + 1);
    for (const auto& c : p.coeffs()) cs.push_back(c.eval(n0));
    return PolyQ(std::move(cs));
}

std::vector<long> confirmed_shifts(const PolyK& a, const PolyK& b) {
    if (a.degree() <= 0 || b.degree() <= 0) return {};
    // candidates from two degree-preserving specializations of n; small points
    // keep the resultant coefficients (and their divisor sets) manageable, and
    // the exact gcd below discards anything spurious
    std::vector<long> cand;
    int good = 0;
    for (long n0 = 11; good < 2 && n0 < 10000; ++n0) {
        try {
            PolyQ pa = specialize(a, Rational(n0));
            PolyQ pb = specialize(b, Rational(n0));
            if (pa.degree() != a.degree() || pb.degree() != b.degree()) continue;
            ++good;
            for (long j : shift_candidates(pa, pb)) cand.push_back(j);
        } catch (const pole_error&) {
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<long> out;
    for (long j : cand)
        if (PolyK::gcd(a, b.taylor_shift(RatFun(static_cast<int>(j)))).degree() > 0)
            out.push_back(j);
    return out;
}

// ---- canonical (p, q, r) form ---------------------------------------------

template <class F>
struct GForm {
    Poly<F> p, q, r;
};

// ratio = (p(k+1)/p(k)) * (q(k)/r(k)) with gcd(q(k), r(k+j)) = 1 for j >= 0
template <class F>
GForm<F> gosper_form(Poly<F> a, Poly<F> b, const std::vector<long>& shifts) {
    Poly<F> p(1);
    for (long j : shifts) {
        Poly<F> g = Poly<F>::gcd(a, b.taylor_shift(F(static_cast<int>(j))));
        if (g.degree() <= 0) continue;
        a = Poly<F>::exact_div(a, g);
        b = Poly<F>::exact_div(b, g.taylor_shift(F(static_cast<int>(-j))));
        for (long i = 1; i <= j; ++i) p *= g.taylor_shift(F(static_cast<int>(-i)));
    }
    return {std::move(p), std::move(a), std::move(b)};
}

// ---- degree bound for the polynomial unknown -------------------------------

std::optional<long> as_nonneg_integer(const Rational& r) {
    if (r.is_integer() && r.sign() >= 0 && r.num().fits_slong_p())
        return r.num().get_si();
    return std::nullopt;
}

std::optional<long> as_nonneg_integer(const RatFun& f) {
    if (f.is_polynomial() && f.num().degree() <= 0)
        return as_nonneg_integer(f.num().coeff(0));
    return std::nullopt;
}

// bound for deg x in p(k) = sigma(k) x(k+1) - tau(k) x(k)
template <class F>
long x_degree_bound(long deg_p, const Poly<F>& sigma, const Poly<F>& tau) {
    long D = std::max(sigma.degree(), tau.degree());
    Poly<F> s = sigma - tau;
    if (s.degree() == D) return deg_p - D;
    if (D == 0) return deg_p + 1; // sigma = tau constant: pure difference
    long d = deg_p - D + 1;
    F lambda = sigma.leading();
    F cand = (tau.coeff(static_cast<int>(D) - 1) - sigma.coeff(static_cast<int>(D) - 1)) /
             lambda;
    if (auto v = as_nonneg_integer(cand)) d = std::max(d, *v);
    return d;
}

// joint canonical scaling of a polynomial list; returns the rational factor f
// such that output = input / f
Rational normalize_with_factor(std::vector<PolyQ>& polys, std::size_t pivot) {
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
    if (content == 0) return Rational(1);
    Rational factor(content, den);
    if (polys[pivot].leading().sign() < 0) factor = -factor;
    for (auto& p : polys) p = p * factor.inverse();
    return factor;
}

BiRat birat_const(const RatFun& f) {
    return {BiPoly::from_poly(f.num(), false), BiPoly::from_poly(f.den(), false)};
}

} // namespace

// ---- HyperTerm2 ------------------------------------------------------------

bool HyperTerm2::compatible() const {
    return (ratio_n.shift_y(Rational(1)) * ratio_k).equals(ratio_k.shift_x(Rational(1)) * ratio_n);
}

Rational HyperTerm2::value(long n, long k) const {
    if (k < k_lo || k > n + k_hi_offset) return Rational(0);
    Rational v = anchor_value;
    for (long m = anchor_n; m < n; ++m) v *= ratio_n.eval(Rational(m), Rational(anchor_k));
    for (long m = n; m < anchor_n; ++m) v /= ratio_n.eval(Rational(m), Rational(anchor_k));
    for (long j = anchor_k; j < k; ++j) v *= ratio_k.eval(Rational(n), Rational(j));
    for (long j = k; j < anchor_k; ++j) v /= ratio_k.eval(Rational(n), Rational(j));
    return v;
}

Rational HyperTerm2::sum(long n) const {
    Rational s(0);
    long hi = n + k_hi_offset;
    if (k_lo > hi) return s;
    Rational v = value(n, k_lo);
    for (long k = k_lo;; ++k) {
        s += v;
        if (k == hi) break;
        v *= ratio_k.eval(Rational(n), Rational(k));
    }
    return s;
}

// ---- Gosper -----------------------------------------------------------------

std::optional<RatFun> gosper(const HyperTerm1& term) {
    if (term.ratio.is_zero()) return std::nullopt;
    const PolyQ &a = term.ratio.num(), &b = term.ratio.den();
    auto form = gosper_form<Rational>(a, b, confirmed_shifts(a, b));
    const PolyQ& p = form.p;
    const PolyQ& sigma = form.q;
    PolyQ tau = form.r.taylor_shift(Rational(-1));

    long d = x_degree_bound<Rational>(p.degree(), sigma, tau);
    if (d < 0) return std::nullopt;

    // p(k) = sigma(k) x(k+1) - tau(k) x(k), unknowns x_0..x_d
    std::vector<PolyQ> cols;
    PolyQ kpow(1), k1pow(1);
    PolyQ kv = PolyQ::variable(), k1 = kv + PolyQ(1);
    for (long j = 0; j <= d; ++j) {
        cols.push_back(sigma * k1pow - tau * kpow);
        kpow *= kv;
        k1pow *= k1;
    }
    long rows = p.degree();
    for (const auto& c : cols) rows = std::max(rows, static_cast<long>(c.degree()));
    ++rows;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols.size()));
    std::vector<Rational> rhs(rows);
    for (long i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = cols[j].coeff(i);
        rhs[i] = p.coeff(i);
    }
    auto sol = solve_linear_exact<Rational>(std::move(m), rhs);
    if (!sol.consistent) return std::nullopt;
    PolyQ x(std::move(sol.particular));

    RatFun R(tau * x, p);
    // paranoia: the defining identity must hold exactly
    if (R.shift(Rational(1)) * term.ratio - R != RatFun(1)) return std::nullopt;
    return R;
}

// ---- Zeilberger --------------------------------------------------------------

std::optional<Certificate> zeilberger(const HyperTerm2& term, int max_order) {
    if (!term.compatible())
        throw std::invalid_argument("zeilberger: incompatible shift ratios");
    RatK rk = term.ratio_k.as_ratk();

    std::vector<RatK> rho{RatK(RatFun(1))};
    BiRat acc(Rational(1));
    for (int d = 0; d <= max_order; ++d) {
        if (d > 0) {
            acc = acc * term.ratio_n.shift_x(Rational(d - 1));
            rho.push_back(acc.as_ratk());
        }
        // common denominator C(k) of the n-shift ratios
        PolyK C(1);
        for (const auto& r : rho) C = PolyK::lcm(C, r.den());
        std::vector<PolyK> nums;
        for (const auto& r : rho)
            nums.push_back(r.num() * PolyK::exact_div(C, r.den()));
        long p0deg = 0;
        for (const auto& nu : nums) p0deg = std::max(p0deg, static_cast<long>(nu.degree()));

        // known part of the k-ratio of sum_i sigma_i F(n+i,k)
        RatK grat = RatK(C, C.taylor_shift(RatFun(1))) * rk;
        auto form = gosper_form<RatFun>(grat.num(), grat.den(),
                                        confirmed_shifts(grat.num(), grat.den()));
        const PolyK& p = form.p;
        const PolyK& sigma = form.q;
        PolyK tau = form.r.taylor_shift(RatFun(-1));

        long xd = x_degree_bound<RatFun>(p.degree() + p0deg, sigma, tau);
        if (xd < 0) continue;

        // p(k) * sum_i sigma_i nums_i(k) = sigma(k) X(k+1) - tau(k) X(k)
        std::vector<PolyK> cols;
        PolyK kv = PolyK::variable(), k1 = kv + PolyK(1);
        PolyK kpow(1), k1pow(1);
        for (long j = 0; j <= xd; ++j) {
            cols.push_back(sigma * k1pow - tau * kpow);
            kpow *= kv;
            k1pow *= k1;
        }
        for (const auto& nu : nums) cols.push_back(-(p * nu));

        long rows = 0;
        for (const auto& c : cols) rows = std::max(rows, static_cast<long>(c.degree()));
        ++rows;
        std::vector<std::vector<RatFun>> m(rows, std::vector<RatFun>(cols.size(), RatFun(0)));
        for (long i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = cols[j].coeff(i);
        auto sol = solve_linear_exact<RatFun>(std::move(m));

        for (const auto& v : sol.nullspace) {
            std::vector<RatFun> sig(v.begin() + (xd + 1), v.end());
            bool nonzero = false;
            for (const auto& s : sig)
                if (!s.is_zero()) nonzero = true;
            if (!nonzero) continue;

            PolyK X(std::vector<RatFun>(v.begin(), v.begin() + (xd + 1)));
            RatK R = RatK(tau * X, p * C);

            // clear sigma to polynomials in n; the certificate scales along
            PolyQ L(1);
            for (const auto& s : sig) L = PolyQ::lcm(L, s.den());
            std::vector<PolyQ> coeffs;
            for (const auto& s : sig)
                coeffs.push_back(s.num() * PolyQ::exact_div(L, s.den()));
            std::size_t top = coeffs.size() - 1;
            while (top > 0 && coeffs[top].is_zero()) --top;
            coeffs.resize(top + 1);
            Rational fac = normalize_with_factor(coeffs, coeffs.size() - 1);
            RatFun mult = RatFun(L) * RatFun(PolyQ(fac.inverse()));
            R = R * RatK(PolyK(mult));

            Certificate cert{BiRat::from_ratk(R), Recurrence{std::move(coeffs), 0}};
            if (verify_certificate(term, cert)) return cert;
        }
    }
    return std::nullopt;
}

bool verify_certificate(const HyperTerm2& term, const Certificate& cert) {
    BiRat lhs{BiPoly(0), BiPoly(1)};
    BiRat rho(Rational(1));
    for (std::size_t i = 0; i < cert.op.coeffs.size(); ++i) {
        if (i > 0) rho = rho * term.ratio_n.shift_x(Rational(static_cast<long>(i) - 1));
        if (!cert.op.coeffs[i].is_zero())
            lhs = lhs + BiRat(BiPoly::from_poly(cert.op.coeffs[i], false)) * rho;
    }
    BiRat rhs = cert.R.shift_y(Rational(1)) * term.ratio_k - cert.R;
    return (lhs - rhs).is_zero();
}

std::optional<long> numeric_sum_check(const HyperTerm2& term, const Recurrence& op,
                                      long n_lo, long n_hi) {
    long d = op.order();
    if (n_hi - n_lo < d)
        throw std::out_of_range("numeric_sum_check: range shorter than the operator");
    std::vector<Rational> S;
    S.reserve(n_hi - n_lo + 1);
    for (long n = n_lo; n <= n_hi; ++n) S.push_back(term.sum(n));
    for (long n = std::max(n_lo, op.valid_from); n + d <= n_hi; ++n) {
        Rational accv(0);
        for (long i = 0; i <= d; ++i)
            accv += op.coeffs[i].eval(Rational(n)) * S[n + i - n_lo];
        if (!accv.is_zero()) return n;
    }
    return std::nullopt;
}

std::optional<Certificate> sum_recurrence(const HyperTerm2& term, int max_order) {
    auto base = zeilberger(term, max_order);
    if (!base) return std::nullopt;
    return sum_recurrence(term, *base);
}

std::optional<Certificate> sum_recurrence(const HyperTerm2& term, const Certificate& base_in) {
    const Certificate* base = &base_in;

    const long n_start = std::max(term.k_lo - term.k_hi_offset, base->op.valid_from);
    const long window = 160;
    const long d = base->op.order();
    std::vector<Rational> S;
    for (long n = n_start; n <= n_start + window + d; ++n) S.push_back(term.sum(n));
    std::vector<Rational> resid;
    for (long n = n_start; n <= n_start + window; ++n) {
        Rational r(0);
        for (long i = 0; i <= d; ++i)
            r += base->op.coeffs[i].eval(Rational(n)) * S[n + i - n_start];
        resid.push_back(r);
    }
    bool allzero = true;
    for (const auto& r : resid)
        if (!r.is_zero()) allzero = false;
    if (allzero) return *base; // telescoped operator already annihilates the sum

    // the residual of the telescoped operator on the true sums is itself
    // hypergeometric; recover its term ratio and absorb it with one more order
    std::vector<std::pair<Rational, Rational>> samples;
    for (long i = 0; i + 1 < static_cast<long>(resid.size()); ++i) {
        if (resid[i].is_zero()) {
            if (!samples.empty()) return std::nullopt; // interior zero: not hypergeometric
            continue;
        }
        samples.emplace_back(Rational(n_start + i), resid[i + 1] / resid[i]);
    }
    if (samples.size() < 60) return std::nullopt;
    GuessConfig cfg;
    auto rr = guess_ratfun_of_n(samples, cfg);
    if (!rr) return std::nullopt;
    const PolyQ u = rr->num(), v = rr->den(); // resid(n+1)/resid(n) = u/v

    std::vector<PolyQ> coeffs(d + 2);
    for (long j = 0; j <= d + 1; ++j) {
        PolyQ c;
        if (j >= 1) c += v * base->op.coeffs[j - 1].taylor_shift(Rational(1));
        if (j <= d) c -= u * base->op.coeffs[j];
        coeffs[j] = c;
    }
    BiRat R3 = birat_const(RatFun(v)) * base->R.shift_x(Rational(1)) * term.ratio_n -
               birat_const(RatFun(u)) * base->R;
    Rational fac = normalize_with_factor(coeffs, coeffs.size() - 1);
    R3 = R3 * BiRat(fac.inverse());

    Certificate cert{R3, Recurrence{std::move(coeffs), samples.front().first.num().get_si()}};
    if (!verify_certificate(term, cert)) return std::nullopt;
    return cert;
}

} // namespace tq
