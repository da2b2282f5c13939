#ifndef TUTTEQ_RATIONAL_HPP
#define TUTTEQ_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tq {

struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t p) : std::runtime_error(msg), pos(p) {}
};

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact arbitrary-precision fraction. Always normalized: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned long e) const;
    Rational inverse() const { return Rational(1) / *this; }

    double to_double() const { return v_.get_d(); }

    /// "p/q" for non-integers, "p" otherwise.
    std::string str() const;

    /// Plain decimal rendering with the given number of significant digits,
    /// round-half-even. No exponent notation.
    std::string decimal(int sig_digits) const;

    /// Combined bit length of numerator and denominator (pivot cost).
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

private:
    mpq_class v_;
};

inline std::size_t complexity(const Rational& r) { return r.bit_size(); }

} // namespace tq

#endif
