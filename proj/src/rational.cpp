#include "tutteq/rational.hpp"

namespace tq {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n);
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid rational literal: " + s, 0);
    }
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

namespace {

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// round(a/b) half-to-even for a, b > 0
mpz_class round_half_even(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class twice = 2 * r;
    if (twice > b || (twice == b && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    return q;
}

} // namespace

std::string Rational::decimal(int sig_digits) const {
    if (sig_digits < 1) throw std::domain_error("decimal: need at least one digit");
    if (is_zero()) return "0";
    bool neg = sign() < 0;
    mpz_class p = ::abs(num()), q = den();

    // e = floor(log10(p/q)), found from digit counts then adjusted exactly
    long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    auto cmp_pow = [&](long ex) {
        // compare p/q with 10^ex : return sign of p/q - 10^ex
        if (ex >= 0) return cmp(p, q * pow10(ex));
        return cmp(p * pow10(-ex), q);
    };
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;

    long m = sig_digits - 1 - e;
    mpz_class digits = m >= 0 ? round_half_even(p * pow10(m), q)
                              : round_half_even(p, q * pow10(-m));
    if (digits >= pow10(sig_digits)) { // rounded up to the next power of ten
        digits /= 10;
        ++e;
    }

    std::string ds = digits.get_str();
    std::string out;
    if (e >= 0) {
        if (e + 1 >= static_cast<long>(ds.size()))
            out = ds + std::string(e + 1 - ds.size(), '0');
        else
            out = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
    } else {
        out = "0." + std::string(-e - 1, '0') + ds;
    }
    return neg ? "-" + out : out;
}

} // namespace tq
