#ifndef TUTTEQ_SERIES_HPP
#define TUTTEQ_SERIES_HPP

#include <vector>

#include "tutteq/rational.hpp"

namespace tq {

/// Truncated formal power series: coefficients 0..N of a series in x.
/// Arithmetic truncates to the smaller order of the operands.
class Series {
public:
    explicit Series(int truncation_order)
        : c_(static_cast<std::size_t>(truncation_order) + 1, Rational(0)) {
        if (truncation_order < 0) throw std::domain_error("Series: negative order");
    }
    explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::domain_error("Series: empty coefficient list");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& coeff(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("Series: coefficient index beyond truncation");
        return c_[n];
    }
    void set_coeff(int n, const Rational& v) {
        if (n < 0 || n > order())
            throw std::out_of_range("Series: coefficient index beyond truncation");
        c_[n] = v;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Rational& s);
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// r-th power by binary exponentiation, r >= 1.
    Series pow(unsigned r) const;

    static Series one(int truncation_order) {
        Series s(truncation_order);
        s.c_[0] = Rational(1);
        return s;
    }

private:
    std::vector<Rational> c_;
};

} // namespace tq

#endif
