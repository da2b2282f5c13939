#include "tutteq/series.hpp"

namespace tq {

Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

Series operator*(const Series& a, const Rational& s) {
    Series r(a);
    for (auto& v : r.c_) v *= s;
    return r;
}

Series Series::pow(unsigned r) const {
    if (r == 0) throw std::domain_error("Series: power must be >= 1");
    Series base(*this), acc = Series::one(order());
    bool started = false;
    while (r > 0) {
        if (r & 1u) {
            acc = started ? acc * base : base;
            started = true;
        }
        r >>= 1;
        if (r) base = base * base;
    }
    return acc;
}

} // namespace tq
