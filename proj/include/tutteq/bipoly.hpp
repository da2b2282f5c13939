#ifndef TUTTEQ_BIPOLY_HPP
#define TUTTEQ_BIPOLY_HPP

#include <map>
#include <string>

#include "tutteq/ratfun.hpp"

namespace tq {

/// Sparse bivariate polynomial over Rational. Keys are (deg_first, deg_second);
/// zero coefficients are never stored. The two variables are called x and y
/// here, but stand for (n, k) in telescoping contexts.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (!c.is_zero()) c_[{0, 0}] = c;
    }
    BiPoly(int n) : BiPoly(Rational(n)) {}

    static BiPoly var_x() { return monomial(Rational(1), 1, 0); }
    static BiPoly var_y() { return monomial(Rational(1), 0, 1); }
    static BiPoly monomial(const Rational& c, int dx, int dy) {
        BiPoly p;
        if (!c.is_zero()) p.c_[{dx, dy}] = c;
        return p;
    }
    /// Embed a univariate polynomial as a polynomial in x (dy = 0) or y.
    static BiPoly from_poly(const PolyQ& p, bool in_y);

    bool is_zero() const { return c_.empty(); }
    int degree_x() const;
    int degree_y() const;
    const std::map<Key, Rational>& terms() const { return c_; }
    Rational coeff(int dx, int dy) const {
        auto it = c_.find({dx, dy});
        return it == c_.end() ? Rational(0) : it->second;
    }
    void set(int dx, int dy, const Rational& v) {
        if (v.is_zero()) c_.erase({dx, dy});
        else c_[{dx, dy}] = v;
    }

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Rational& s);
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly derivative_x() const;
    BiPoly derivative_y() const;

    /// Substitute x -> x + a (resp. y -> y + a).
    BiPoly shift_x(const Rational& a) const;
    BiPoly shift_y(const Rational& a) const;

    Rational eval(const Rational& x, const Rational& y) const;
    /// Collapse one variable at a rational point.
    PolyQ eval_x(const Rational& x) const; // result is a polynomial in y
    PolyQ eval_y(const Rational& y) const; // result is a polynomial in x

    /// View with y as the main variable and coefficients in Q(x).
    PolyK as_poly_in_y() const;
    /// View with x as the main variable and coefficients in Q(y).
    PolyK as_poly_in_x() const;
    /// Inverse of as_poly_in_y for polynomial (denominator-free) coefficients;
    /// clears inner denominators and reports the clearing factor if asked.
    static BiPoly from_poly_in_y(const PolyK& p, PolyQ* cleared_den = nullptr);

    /// Graded-lex leading monomial, y > x; (-1,-1) for zero.
    Key leading_monomial() const;

    /// Canonical form: integer coefficients, content 1, positive coefficient
    /// on the graded-lex (y > x) leading monomial.
    BiPoly canonical() const;

    /// Total number of stored monomials.
    std::size_t support_size() const { return c_.size(); }

    /// Deterministic printing, graded-lex descending (y > x).
    std::string str(const std::string& xname, const std::string& yname) const;

private:
    std::map<Key, Rational> c_;
    void strip_zero();
};

/// p evaluated at a bivariate argument (Horner).
BiPoly compose(const PolyQ& p, const BiPoly& arg);

/// Lightly-normalized bivariate rational function: only rational content is
/// reduced (no bivariate gcd); equality checks cross-multiply.
struct BiRat {
    BiPoly num, den;

    BiRat() : num(), den(1) {}
    BiRat(BiPoly n, BiPoly d);
    explicit BiRat(const BiPoly& n) : num(n), den(1) {}
    explicit BiRat(const Rational& c) : num(BiPoly(c)), den(1) {}

    bool is_zero() const { return num.is_zero(); }
    BiRat operator-() const;
    friend BiRat operator+(const BiRat& a, const BiRat& b);
    friend BiRat operator-(const BiRat& a, const BiRat& b);
    friend BiRat operator*(const BiRat& a, const BiRat& b);
    friend BiRat operator/(const BiRat& a, const BiRat& b);
    BiRat shift_x(const Rational& a) const { return {num.shift_x(a), den.shift_x(a)}; }
    BiRat shift_y(const Rational& a) const { return {num.shift_y(a), den.shift_y(a)}; }
    BiRat inverse() const;
    Rational eval(const Rational& x, const Rational& y) const;
    /// Structural equality up to cross-multiplication.
    bool equals(const BiRat& o) const { return (num * o.den - o.num * den).is_zero(); }

    /// Convert to a ratio of PolyK (main variable y, coefficients Q(x)),
    /// reduced by the gcd over Q(x)[y].
    RatK as_ratk() const;
    static BiRat from_ratk(const RatK& f);

    std::string str(const std::string& xname, const std::string& yname) const;
};

/// Build a bivariate rational function r(arg) from a univariate one by
/// substituting a bivariate polynomial argument.
BiRat compose(const RatFun& r, const BiPoly& arg);

} // namespace tq

#endif
