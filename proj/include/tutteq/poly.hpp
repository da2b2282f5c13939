#ifndef TUTTEQ_POLY_HPP
#define TUTTEQ_POLY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tutteq/rational.hpp"

namespace tq {

/// Dense univariate polynomial over a field F. Coefficient i is the
/// coefficient of x^i; no trailing zeros are stored, the zero polynomial
/// has an empty coefficient list (degree -1).
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<F> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<F> cs) : c_(std::move(cs)) { trim(); }
    explicit Poly(const F& c) : c_{c} { trim(); }
    explicit Poly(int n) : c_{F(n)} { trim(); }

    static Poly monomial(const F& c, int deg) {
        std::vector<F> v(deg + 1, F(0));
        v[deg] = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const F& coeff(int i) const {
        static const F zero(0);
        if (i < 0 || i > degree()) return zero;
        return c_[i];
    }
    const F& leading() const { return c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }

    F eval(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const F& s) {
        Poly r(a);
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Division with remainder over the field F.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = a;
        std::vector<F> qc(std::max(a.degree() - b.degree() + 1, 0), F(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            F f = r.leading() / b.leading();
            int d = r.degree() - b.degree();
            qc[d] = f;
            // r -= f * x^d * b, with explicit cancellation of the lead term
            std::vector<F> rc = r.c_;
            for (int i = 0; i <= b.degree(); ++i) rc[i + d] -= f * b.c_[i];
            rc.pop_back();
            r = Poly(std::move(rc));
        }
        return {Poly(std::move(qc)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    /// Exact division; throws if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (F(1) / leading());
    }

    /// Monic greatest common divisor; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = (a % b).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        return exact_div(a * b, gcd(a, b)).monic();
    }

    /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
    static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
        Poly r0 = a, r1 = b;
        Poly s0(1), s1(0), t0(0), t1(1);
        while (!r1.is_zero()) {
            auto [q, r2] = divrem(r0, r1);
            Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        F lead = r0.leading();
        F inv = F(1) / lead;
        return {r0 * inv, s0 * inv, t0 * inv};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(v));
    }

    /// p(x + a) via Horner on (x + a).
    Poly taylor_shift(const F& a) const {
        Poly acc;
        Poly lin{a, F(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + Poly(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;
};

using PolyQ = Poly<Rational>;

inline std::size_t complexity(const PolyQ& p) {
    std::size_t s = 1;
    for (const auto& c : p.coeffs()) s += c.bit_size();
    return s;
}

/// Integer content of the cleared polynomial together with the common
/// denominator: p = (sign * content / den) * primitive, primitive has
/// integer coefficients, content 1 and positive leading coefficient.
PolyQ primitive_part(const PolyQ& p, Rational* scale = nullptr);

/// Squarefree part p / gcd(p, p').
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.is_zero()) return p;
    Poly<F> g = Poly<F>::gcd(p, p.derivative());
    return Poly<F>::exact_div(p, g);
}

/// All rational roots of a polynomial with rational coefficients, found by
/// the exhaustive divisor test on the integer-cleared extreme coefficients.
std::vector<Rational> rational_roots(const PolyQ& p);

/// All nonnegative integer roots (subset of rational_roots, kept exact).
std::vector<long> nonneg_integer_roots(const PolyQ& p);

} // namespace tq

#endif
