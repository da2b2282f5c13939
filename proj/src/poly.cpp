#include "tutteq/poly.hpp"

#include <map>

namespace tq {

PolyQ primitive_part(const PolyQ& p, Rational* scale) {
    if (p.is_zero()) {
        if (scale) *scale = Rational(0);
        return p;
    }
    mpz_class den(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content(0);
    for (const auto& c : p.coeffs()) {
        mpz_class z = c.num() * (den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
    Rational factor(content, den);
    if (p.leading().sign() < 0) factor = -factor;
    if (scale) *scale = factor;
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c / factor);
    return PolyQ(std::move(out));
}

namespace {

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out);

// Pollard rho with Brent's cycle detection; n odd composite > 1.
mpz_class pollard_rho(const mpz_class& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(2463534242UL);
    while (true) {
        mpz_class y = rng.get_z_range(n - 1) + 1;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, d = 1, q = 1, ys = y;
        const unsigned m = 128;
        unsigned r = 1;
        while (d == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ::abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = ::abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= static_cast<long>(p);
        }
    }
    unsigned long p = 37;
    while (n > 1 && mpz_class(p) * p <= n && p < 1000000UL) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= static_cast<long>(p);
        }
        p += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void divisors_rec(const std::vector<std::pair<mpz_class, unsigned>>& fs, std::size_t i,
                  const mpz_class& acc, std::vector<mpz_class>& out) {
    if (i == fs.size()) {
        out.push_back(acc);
        return;
    }
    mpz_class cur = acc;
    for (unsigned e = 0; e <= fs[i].second; ++e) {
        divisors_rec(fs, i + 1, cur, out);
        if (e < fs[i].second) cur *= fs[i].first;
    }
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, unsigned> fs;
    factor_into(::abs(n), fs);
    std::vector<std::pair<mpz_class, unsigned>> fv(fs.begin(), fs.end());
    std::vector<mpz_class> out;
    divisors_rec(fv, 0, mpz_class(1), out);
    return out;
}

// ---- integer roots without factoring ---------------------------------------
// Roots mod a small prime (where the squarefree part stays squarefree) are
// lifted by quadratic Hensel steps past the Cauchy bound, then confirmed by
// exact evaluation.  Needed when the trailing coefficient is too large for the
// divisor search.

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long long r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<unsigned long>(r);
}

// gcd degree of two polynomials over GF(q), coefficients as small residues
int gf_gcd_degree(std::vector<unsigned long> a, std::vector<unsigned long> b,
                  unsigned long q) {
    auto trim = [](std::vector<unsigned long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        unsigned long inv = mod_pow(b.back(), q - 2, q);
        while (a.size() >= b.size()) {
            unsigned long long c = (unsigned long long)a.back() * inv % q;
            if (c) {
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[off + i] = (a[off + i] + q - (unsigned long)(c * b[i] % q)) % q;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::vector<long> integer_roots_lifted(const PolyQ& q0) {
    PolyQ sf = primitive_part(squarefree_part(q0));
    int d = sf.degree();
    std::vector<mpz_class> f(d + 1), fp(d);
    for (int i = 0; i <= d; ++i) f[i] = sf.coeff(i).num();
    for (int i = 1; i <= d; ++i) fp[i - 1] = f[i] * i;
    mpz_class maxc(0);
    for (int i = 0; i < d; ++i) {
        mpz_class a = ::abs(f[i]);
        if (a > maxc) maxc = a;
    }
    mpz_class B = maxc / ::abs(f[d]) + 2; // Cauchy bound on any root

    auto eval_big = [](const std::vector<mpz_class>& cs, const mpz_class& x) {
        mpz_class acc(0);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    mpz_class prime(10007);
    std::vector<long> out;
    for (int attempt = 0; attempt < 100; ++attempt, mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t())) {
        unsigned long q = prime.get_ui();
        if (mpz_divisible_ui_p(f[d].get_mpz_t(), q)) continue;
        std::vector<unsigned long> fq(d + 1), fpq(d);
        for (int i = 0; i <= d; ++i)
            fq[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
        for (int i = 0; i < d; ++i) fpq[i] = mpz_fdiv_ui(fp[i].get_mpz_t(), q);
        if (gf_gcd_degree(fq, fpq, q) != 0) continue; // not squarefree mod q

        auto horner = [&](const std::vector<unsigned long>& cs, unsigned long x) {
            unsigned long long acc = 0;
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * x + *it) % q;
            return static_cast<unsigned long>(acc);
        };
        for (unsigned long r0 = 0; r0 < q; ++r0) {
            if (horner(fq, r0) != 0) continue;
            mpz_class x(static_cast<long>(r0)), M(static_cast<long>(q));
            while (M <= 2 * B) {
                M *= M;
                mpz_class fx = eval_big(f, x) % M;
                mpz_class fpx = eval_big(fp, x) % M;
                mpz_class inv;
                if (!mpz_invert(inv.get_mpz_t(), fpx.get_mpz_t(), M.get_mpz_t())) break;
                x = (x - fx * inv) % M;
                if (x < 0) x += M;
            }
            if (x > M / 2) x -= M;
            if (x >= 0 && x.fits_slong_p() && eval_big(f, x) == 0)
                out.push_back(x.get_si());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    throw std::runtime_error("integer root search: no usable prime found");
}

} // namespace

std::vector<Rational> rational_roots(const PolyQ& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    PolyQ q = primitive_part(p);
    // strip x^m
    int m = 0;
    while (q.coeff(m).is_zero()) ++m;
    if (m > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> cs(q.coeffs().begin() + m, q.coeffs().end());
        q = PolyQ(std::move(cs));
    }
    if (q.degree() == 0) return roots;
    const mpz_class trailing = q.coeff(0).num();
    const mpz_class lead = q.leading().num();
    for (const auto& a : divisors(trailing)) {
        for (const auto& b : divisors(lead)) {
            for (int s : {1, -1}) {
                Rational cand(s * a, b);
                if (q.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<long> nonneg_integer_roots(const PolyQ& p) {
    std::vector<long> out;
    if (p.is_zero() || p.degree() == 0) return out;
    PolyQ q = primitive_part(p);
    int m = 0;
    while (q.coeff(m).is_zero()) ++m;
    if (m > 0) {
        out.push_back(0);
        std::vector<Rational> cs(q.coeffs().begin() + m, q.coeffs().end());
        q = PolyQ(std::move(cs));
    }
    if (q.degree() == 0) return out;
    if (q.coeff(0).num().fits_slong_p() && q.leading().num().fits_slong_p()) {
        for (const auto& r : rational_roots(q))
            if (r.is_integer() && r.sign() > 0 && r.num().fits_slong_p())
                out.push_back(r.num().get_si());
    } else {
        for (long r : integer_roots_lifted(q))
            if (r > 0) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tq
