#include "tutteq/bipoly.hpp"

#include <sstream>

namespace tq {

namespace {

// binomial(n, k) as mpz
mpz_class binom(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// graded-lex, y > x: compare total degree, then y-degree
bool grlex_less(const BiPoly::Key& a, const BiPoly::Key& b) {
    int ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta < tb;
    return a.second < b.second;
}

} // namespace

BiPoly BiPoly::from_poly(const PolyQ& p, bool in_y) {
    BiPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(i);
        if (!c.is_zero()) out.c_[in_y ? Key{0, i} : Key{i, 0}] = c;
    }
    return out;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_y() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
}

void BiPoly::strip_zero() {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a);
    for (const auto& [k, v] : b.c_) r.c_[k] += v;
    r.strip_zero();
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a);
    for (const auto& [k, v] : b.c_) r.c_[k] -= v;
    r.strip_zero();
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_)
            r.c_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    r.strip_zero();
    return r;
}

BiPoly operator*(const BiPoly& a, const Rational& s) {
    if (s.is_zero()) return BiPoly();
    BiPoly r(a);
    for (auto& [k, v] : r.c_) v *= s;
    return r;
}

BiPoly BiPoly::derivative_x() const {
    BiPoly r;
    for (const auto& [k, v] : c_)
        if (k.first > 0) r.c_[{k.first - 1, k.second}] = v * Rational(k.first);
    return r;
}

BiPoly BiPoly::derivative_y() const {
    BiPoly r;
    for (const auto& [k, v] : c_)
        if (k.second > 0) r.c_[{k.first, k.second - 1}] = v * Rational(k.second);
    return r;
}

BiPoly BiPoly::shift_x(const Rational& a) const {
    if (a.is_zero()) return *this;
    BiPoly r;
    for (const auto& [k, v] : c_) {
        Rational ap(1);
        for (int j = k.first; j >= 0; --j) {
            // coefficient of x^j in (x+a)^{k.first}
            r.c_[{j, k.second}] += v * Rational(binom(k.first, j)) * ap;
            ap *= a;
        }
    }
    r.strip_zero();
    return r;
}

BiPoly BiPoly::shift_y(const Rational& a) const {
    if (a.is_zero()) return *this;
    BiPoly r;
    for (const auto& [k, v] : c_) {
        Rational ap(1);
        for (int j = k.second; j >= 0; --j) {
            r.c_[{k.first, j}] += v * Rational(binom(k.second, j)) * ap;
            ap *= a;
        }
    }
    r.strip_zero();
    return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [k, v] : c_)
        acc += v * x.pow(k.first) * y.pow(k.second);
    return acc;
}

PolyQ BiPoly::eval_x(const Rational& x) const {
    std::vector<Rational> cs(degree_y() + 1, Rational(0));
    for (const auto& [k, v] : c_) cs[k.second] += v * x.pow(k.first);
    return PolyQ(std::move(cs));
}

PolyQ BiPoly::eval_y(const Rational& y) const {
    std::vector<Rational> cs(degree_x() + 1, Rational(0));
    for (const auto& [k, v] : c_) cs[k.first] += v * y.pow(k.second);
    return PolyQ(std::move(cs));
}

PolyK BiPoly::as_poly_in_y() const {
    int dy = degree_y();
    if (dy < 0) return PolyK();
    std::vector<std::vector<Rational>> inner(dy + 1);
    for (auto& row : inner) row.assign(degree_x() + 1, Rational(0));
    for (const auto& [k, v] : c_) inner[k.second][k.first] = v;
    std::vector<RatFun> cs;
    cs.reserve(dy + 1);
    for (auto& row : inner) cs.emplace_back(PolyQ(std::move(row)));
    return PolyK(std::move(cs));
}

PolyK BiPoly::as_poly_in_x() const {
    int dx = degree_x();
    if (dx < 0) return PolyK();
    std::vector<std::vector<Rational>> inner(dx + 1);
    for (auto& row : inner) row.assign(degree_y() + 1, Rational(0));
    for (const auto& [k, v] : c_) inner[k.first][k.second] = v;
    std::vector<RatFun> cs;
    cs.reserve(dx + 1);
    for (auto& row : inner) cs.emplace_back(PolyQ(std::move(row)));
    return PolyK(std::move(cs));
}

BiPoly BiPoly::from_poly_in_y(const PolyK& p, PolyQ* cleared_den) {
    PolyQ den(1);
    for (const auto& c : p.coeffs()) den = PolyQ::lcm(den, c.den());
    BiPoly out;
    for (int j = 0; j <= p.degree(); ++j) {
        const RatFun& c = p.coeff(j);
        if (c.is_zero()) continue;
        PolyQ full = c.num() * PolyQ::exact_div(den, c.den());
        for (int i = 0; i <= full.degree(); ++i)
            if (!full.coeff(i).is_zero()) out.c_[{i, j}] = full.coeff(i);
    }
    if (cleared_den) *cleared_den = den;
    return out;
}

BiPoly::Key BiPoly::leading_monomial() const {
    Key best{-1, -1};
    for (const auto& [k, v] : c_)
        if (best.first < 0 || grlex_less(best, k)) best = k;
    return best;
}

BiPoly BiPoly::canonical() const {
    if (is_zero()) return *this;
    mpz_class den(1);
    for (const auto& [k, v] : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
    mpz_class content(0);
    for (const auto& [k, v] : c_) {
        mpz_class z = v.num() * (den / v.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
    Rational factor(content, den);
    Key lm = leading_monomial();
    if (c_.at(lm).sign() < 0) factor = -factor;
    BiPoly out;
    for (const auto& [k, v] : c_) out.c_[k] = v / factor;
    return out;
}

std::string BiPoly::str(const std::string& xname, const std::string& yname) const {
    if (is_zero()) return "0";
    std::vector<Key> keys;
    keys.reserve(c_.size());
    for (const auto& [k, v] : c_) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return grlex_less(b, a); // descending
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& k : keys) {
        Rational v = c_.at(k);
        if (first) {
            if (v.sign() < 0) { os << "-"; v = -v; }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || v != Rational(1)) {
            os << v.str();
            if (has_var) os << "*";
        }
        if (k.second > 0) {
            os << yname;
            if (k.second > 1) os << "^" << k.second;
            if (k.first > 0) os << "*";
        }
        if (k.first > 0) {
            os << xname;
            if (k.first > 1) os << "^" << k.first;
        }
    }
    return os.str();
}

BiPoly compose(const PolyQ& p, const BiPoly& arg) {
    BiPoly acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * arg + BiPoly(p.coeff(i));
    return acc;
}

BiRat::BiRat(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("BiRat: zero denominator");
    if (num.is_zero()) {
        den = BiPoly(1);
        return;
    }
    // reduce only rational content, keep the bivariate structure as-is
    BiPoly cn = num.canonical(), cd = den.canonical();
    Rational sn = num.terms().begin()->second / cn.terms().begin()->second;
    Rational sd = den.terms().begin()->second / cd.terms().begin()->second;
    num = cn * (sn / sd);
    den = std::move(cd);
}

BiRat BiRat::operator-() const {
    BiRat r(*this);
    r.num = -r.num;
    return r;
}

BiRat operator+(const BiRat& a, const BiRat& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

BiRat operator-(const BiRat& a, const BiRat& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

BiRat operator*(const BiRat& a, const BiRat& b) {
    return {a.num * b.num, a.den * b.den};
}

BiRat operator/(const BiRat& a, const BiRat& b) {
    if (b.is_zero()) throw std::domain_error("BiRat: division by zero");
    return {a.num * b.den, a.den * b.num};
}

BiRat BiRat::inverse() const {
    if (is_zero()) throw std::domain_error("BiRat: inverse of zero");
    return {den, num};
}

Rational BiRat::eval(const Rational& x, const Rational& y) const {
    Rational d = den.eval(x, y);
    if (d.is_zero()) throw pole_error("BiRat: pole at evaluation point");
    return num.eval(x, y) / d;
}

RatK BiRat::as_ratk() const {
    return RatK(num.as_poly_in_y(), den.as_poly_in_y());
}

BiRat BiRat::from_ratk(const RatK& f) {
    PolyQ dn, dd;
    BiPoly n = BiPoly::from_poly_in_y(f.num(), &dn);
    BiPoly d = BiPoly::from_poly_in_y(f.den(), &dd);
    return {n * BiPoly::from_poly(dd, false), d * BiPoly::from_poly(dn, false)};
}

std::string BiRat::str(const std::string& xname, const std::string& yname) const {
    if (den == BiPoly(1)) return num.str(xname, yname);
    return "(" + num.str(xname, yname) + ")/(" + den.str(xname, yname) + ")";
}

BiRat compose(const RatFun& r, const BiPoly& arg) {
    return {compose(r.num(), arg), compose(r.den(), arg)};
}

} // namespace tq
