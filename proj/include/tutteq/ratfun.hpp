#ifndef TUTTEQ_RATFUN_HPP
#define TUTTEQ_RATFUN_HPP

#include "tutteq/poly.hpp"

namespace tq {

/// Rational function num/den over a field F, kept reduced with a monic
/// denominator (content moved into the numerator).
template <class F>
class RatFunT {
public:
    RatFunT() : num_(), den_(1) {}
    RatFunT(int n) : num_(n), den_(1) {}
    explicit RatFunT(const F& c) : num_(c), den_(1) {}
    RatFunT(Poly<F> num) : num_(std::move(num)), den_(1) {}
    RatFunT(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        normalize();
    }

    static RatFunT variable() { return RatFunT(Poly<F>::variable()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunT operator-() const { return RatFunT(unchecked{}, -num_, den_); }

    friend RatFunT operator+(const RatFunT& a, const RatFunT& b) {
        return RatFunT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunT operator-(const RatFunT& a, const RatFunT& b) {
        return RatFunT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunT operator*(const RatFunT& a, const RatFunT& b) {
        // cross-reduce first to keep intermediates small
        Poly<F> g1 = Poly<F>::gcd(a.num_, b.den_);
        Poly<F> g2 = Poly<F>::gcd(b.num_, a.den_);
        Poly<F> n = Poly<F>::exact_div(a.num_, g1) * Poly<F>::exact_div(b.num_, g2);
        Poly<F> d = Poly<F>::exact_div(a.den_, g2) * Poly<F>::exact_div(b.den_, g1);
        return RatFunT(std::move(n), std::move(d));
    }
    friend RatFunT operator/(const RatFunT& a, const RatFunT& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return a * RatFunT(unchecked{}, b.den_, b.num_);
    }
    RatFunT& operator+=(const RatFunT& o) { return *this = *this + o; }
    RatFunT& operator-=(const RatFunT& o) { return *this = *this - o; }
    RatFunT& operator*=(const RatFunT& o) { return *this = *this * o; }
    RatFunT& operator/=(const RatFunT& o) { return *this = *this / o; }

    friend bool operator==(const RatFunT& a, const RatFunT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunT& a, const RatFunT& b) { return !(a == b); }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d == F(0)) throw pole_error("RatFun: pole at evaluation point");
        return num_.eval(x) / d;
    }

    /// Substitute var -> var + a.
    RatFunT shift(const F& a) const {
        return RatFunT(unchecked{}, num_.taylor_shift(a), den_.taylor_shift(a));
    }

    RatFunT inverse() const {
        if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
        return RatFunT(den_, num_);
    }

private:
    struct unchecked {};
    RatFunT(unchecked, Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) {
        normalize_sign_only();
    }
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            return;
        }
        Poly<F> g = Poly<F>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<F>::exact_div(num_, g);
            den_ = Poly<F>::exact_div(den_, g);
        }
        normalize_sign_only();
    }
    void normalize_sign_only() {
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            return;
        }
        F lead = den_.leading();
        if (!(lead == F(1))) {
            F inv = F(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    Poly<F> num_, den_;
};

/// Rational functions of one symbol over Q; the workhorse for guessing and
/// for coefficient fields Q(n).
using RatFun = RatFunT<Rational>;

inline std::size_t complexity(const RatFun& f) {
    return complexity(f.num()) + complexity(f.den());
}

/// Polynomials in a second variable with coefficients in Q(n).
using PolyK = Poly<RatFun>;
/// The field Q(n)(k).
using RatK = RatFunT<RatFun>;

inline std::size_t complexity(const PolyK& p) {
    std::size_t s = 1;
    for (const auto& c : p.coeffs()) s += complexity(c);
    return s;
}

} // namespace tq

#endif
