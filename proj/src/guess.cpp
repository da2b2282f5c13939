#include "tutteq/guess.hpp"

#include "tutteq/linsolve.hpp"

namespace tq {

namespace {

// powers 1, n, n^2, ... evaluated at a point
std::vector<Rational> power_row(const Rational& n, int degree) {
    std::vector<Rational> row(degree + 1);
    row[0] = Rational(1);
    for (int m = 1; m <= degree; ++m) row[m] = row[m - 1] * n;
    return row;
}

Recurrence build_rec(const std::vector<Rational>& coeffs, int order, int degree) {
    Recurrence rec;
    rec.coeffs.reserve(order + 1);
    for (int i = 0; i <= order; ++i) {
        std::vector<Rational> cs(coeffs.begin() + i * (degree + 1),
                                 coeffs.begin() + (i + 1) * (degree + 1));
        rec.coeffs.emplace_back(std::move(cs));
    }
    rec.valid_from = 0;
    return rec;
}

} // namespace

std::optional<Recurrence> guess_recurrence(const std::vector<Rational>& seq,
                                           const GuessConfig& cfg) {
    const long len = static_cast<long>(seq.size());
    for (int total = 1; total <= cfg.max_order + cfg.max_poly_degree; ++total) {
        for (int order = std::max(1, total - cfg.max_poly_degree);
             order <= std::min(total, cfg.max_order); ++order) {
            int degree = total - order;
            long unknowns = static_cast<long>(order + 1) * (degree + 1);
            long fit_rows = unknowns + cfg.overdetermination_margin;
            long windows = len - order; // equations at n = 0 .. windows-1
            if (fit_rows + cfg.holdout > windows) continue;

            std::vector<std::vector<Rational>> m(fit_rows);
            for (long n = 0; n < fit_rows; ++n) {
                auto pw = power_row(Rational(n), degree);
                auto& row = m[n];
                row.reserve(unknowns);
                for (int i = 0; i <= order; ++i)
                    for (int d = 0; d <= degree; ++d) row.push_back(pw[d] * seq[n + i]);
            }
            auto sol = solve_linear_exact<Rational>(std::move(m));
            for (const auto& v : sol.nullspace) {
                Recurrence cand = build_rec(v, order, degree).canonical();
                if (cand.coeffs.back().is_zero()) continue;
                if (!rec_check(cand, seq, 0)) return cand; // all residuals zero
            }
        }
    }
    return std::nullopt;
}

std::optional<RatFun> guess_ratfun_of_n(
    const std::vector<std::pair<Rational, Rational>>& samples, const GuessConfig& cfg) {
    const long count = static_cast<long>(samples.size());
    for (int d = 0; d <= cfg.max_poly_degree; ++d) {
        long unknowns = 2L * (d + 1);
        long fit_rows = unknowns + cfg.overdetermination_margin;
        if (fit_rows + cfg.holdout > count) continue;

        std::vector<std::vector<Rational>> m(fit_rows);
        for (long s = 0; s < fit_rows; ++s) {
            auto pw = power_row(samples[s].first, d);
            auto& row = m[s];
            row.reserve(unknowns);
            for (int i = 0; i <= d; ++i) row.push_back(pw[i]);                      // u
            for (int i = 0; i <= d; ++i) row.push_back(-samples[s].second * pw[i]); // v
        }
        auto sol = solve_linear_exact<Rational>(std::move(m));
        for (const auto& vsol : sol.nullspace) {
            PolyQ u(std::vector<Rational>(vsol.begin(), vsol.begin() + d + 1));
            PolyQ v(std::vector<Rational>(vsol.begin() + d + 1, vsol.end()));
            if (v.is_zero()) continue;
            bool ok = true;
            for (const auto& [n, val] : samples) {
                Rational vn = v.eval(n);
                if (vn.is_zero() || u.eval(n) != val * vn) {
                    ok = false;
                    break;
                }
            }
            if (ok) return RatFun(u, v);
        }
    }
    return std::nullopt;
}

std::optional<BiPoly> guess_algeq(const Series& series, int deg_y, int deg_x,
                                  const GuessConfig& cfg) {
    const int N = series.order();
    const long unknowns = static_cast<long>(deg_x + 1) * (deg_y + 1);
    long fit_rows = unknowns + cfg.overdetermination_margin;
    if (fit_rows + cfg.holdout > N + 1) return std::nullopt;

    std::vector<Series> powers;
    powers.reserve(deg_y + 1);
    powers.push_back(Series::one(N));
    for (int j = 1; j <= deg_y; ++j) powers.push_back(powers.back() * series);

    std::vector<std::vector<Rational>> m(fit_rows, std::vector<Rational>(unknowns));
    for (long n = 0; n < fit_rows; ++n) {
        long col = 0;
        for (int j = 0; j <= deg_y; ++j)
            for (int i = 0; i <= deg_x; ++i) {
                m[n][col++] = (n - i >= 0) ? powers[j].coeff(n - i) : Rational(0);
            }
    }
    auto sol = solve_linear_exact<Rational>(std::move(m));

    std::optional<BiPoly> best;
    for (const auto& v : sol.nullspace) {
        BiPoly P;
        long col = 0;
        for (int j = 0; j <= deg_y; ++j)
            for (int i = 0; i <= deg_x; ++i) P.set(i, j, v[col++]);
        if (P.is_zero()) continue;
        // re-verify against the full truncation order
        Series total(N);
        for (const auto& [key, c] : P.terms()) {
            const auto& pj = powers[key.second];
            for (int n = key.first; n <= N; ++n)
                total.set_coeff(n, total.coeff(n) + c * pj.coeff(n - key.first));
        }
        if (!total.is_zero()) continue;
        BiPoly cand = P.canonical();
        if (!best || cand.support_size() < best->support_size() ||
            (cand.support_size() == best->support_size() &&
             [&] {
                 auto a = cand.leading_monomial(), b = best->leading_monomial();
                 int ta = a.first + a.second, tb = b.first + b.second;
                 return ta < tb || (ta == tb && a.second < b.second);
             }()))
            best = cand;
    }
    return best;
}

} // namespace tq
