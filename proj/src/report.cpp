#include "tutteq/report.hpp"

#include <cmath>
#include <sstream>

#include "tutteq/guess.hpp"
#include "tutteq/parser.hpp"

namespace tq {

namespace {

const std::vector<std::string> kLimitFractions = {
    "10/27",
    "25/243",
    "500/19683",
    "3125/531441",
    "6250/4782969",
    "109375/387420489",
    "625000/10460353203",
    "390625/31381059609",
    "19531250/7625597484987",
    "107421875/205891132094649",
};

const std::vector<std::string> kLimitDecimals = {
    "0.3703703704",
    "0.1028806584",
    "0.02540263171",
    "0.005880238822",
    "0.001306719738",
    "0.0002823159928",
    "0.00005974941647",
    "0.00001244779510",
    "0.000002561274712",
    "0.0000005217411450",
};

void add(SuiteReport& rep, std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    rep.items.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

std::string ok_or(const std::string& good, bool cond, const std::string& bad) {
    return cond ? good : bad;
}

// [x^n] g^r by explicit sum over compositions of n into r positive parts
Rational power_coeff_bruteforce(int r, long n) {
    if (r == 1) return tutte_coeff(n);
    Rational acc(0);
    for (long first = 1; first <= n - (r - 1); ++first)
        acc += tutte_coeff(first) * power_coeff_bruteforce(r - 1, n - first);
    return acc;
}

} // namespace

const std::vector<std::string>& reference_limit_fractions() { return kLimitFractions; }
const std::vector<std::string>& reference_limit_decimals() { return kLimitDecimals; }

std::vector<BTableRow> b_table(int max_r, int decimals) {
    std::vector<BTableRow> rows;
    for (int r = 2; r <= max_r; ++r) {
        Rational b = limit_B(r);
        rows.push_back({r, b.str(), b.decimal(decimals)});
    }
    return rows;
}

SuiteReport run_verify_suite(long max_n, int max_r) {
    SuiteReport rep;
    max_n = std::max(max_n, 10L);
    max_r = std::max(max_r, 2);

    // --- census coefficients -------------------------------------------------
    {
        std::ostringstream got;
        for (int n = 1; n <= 5; ++n) got << (n > 1 ? ", " : "") << tutte_coeff(n).str();
        add(rep, "coeff-small-values", "1, 3, 13, 68, 399", got.str());
    }
    {
        long N = std::min(max_n, 300L);
        long bad = 0;
        Series g = tutte_series(static_cast<int>(N));
        for (long n = 1; n <= N && !bad; ++n) {
            Rational direct =
                Rational(2) * Rational::factorial(4 * n + 1) /
                (Rational::factorial(n + 1) * Rational::factorial(3 * n + 2));
            if (g.coeff(n) != direct) bad = n;
        }
        add(rep, "coeff-matches-factorial-formula", "exact match",
            ok_or("exact match", bad == 0, "mismatch at n=" + std::to_string(bad)));
    }

    // --- ratio closed forms ---------------------------------------------------
    std::vector<RatFun> formulas;   // index r-2
    std::vector<Rational> limits;   // index r-2
    bool formulas_ok = true;
    for (int r = 2; r <= max_r; ++r) {
        try {
            RatioReport rr = closed_form_A(r);
            formulas.push_back(*rr.formula);
            limits.push_back(rr.limit ? *rr.limit : Rational(0));
        } catch (const std::exception&) {
            formulas_ok = false;
            break;
        }
    }
    {
        long N = std::min(max_n, 500L);
        Series g2 = tutte_series(static_cast<int>(N)).pow(2);
        long bad = 0;
        RatFun f = printed_ratio_formula(2);
        for (long n = 1; n <= N && !bad; ++n)
            if (g2.coeff(n) / tutte_coeff(n) != f.eval(Rational(n))) bad = n;
        add(rep, "ratio-r2-matches-closed-form", "all n equal",
            ok_or("all n equal", bad == 0, "mismatch at n=" + std::to_string(bad)));
    }
    add(rep, "recovered-formula-r2", "printed form, limit 10/27",
        ok_or("printed form, limit 10/27",
              formulas_ok && formulas.size() >= 1 && formulas[0] == printed_ratio_formula(2) &&
                  limits[0] == Rational(10, 27),
              "differs"));
    if (max_r >= 4) {
        bool ok = formulas_ok && formulas.size() >= 3 &&
                  formulas[1] == printed_ratio_formula(3) &&
                  formulas[2] == printed_ratio_formula(4) &&
                  limits[1] == Rational(25, 243) && limits[2] == Rational(500, 19683);
        add(rep, "recovered-formulas-r3-r4", "printed forms and limits",
            ok_or("printed forms and limits", ok, "differs"));
    }
    {
        std::ostringstream want, got;
        bool ok = formulas_ok;
        for (int r = 2; r <= std::min(max_r, 11); ++r) {
            want << (r > 2 ? ", " : "") << kLimitFractions[r - 2];
            if (formulas_ok) got << (r > 2 ? ", " : "") << limits[r - 2].str();
        }
        add(rep, "limit-table-fractions", want.str(), ok ? got.str() : "unavailable");
    }
    {
        std::ostringstream want, got;
        bool ok = formulas_ok;
        for (int r = 2; r <= std::min(max_r, 11); ++r) {
            want << (r > 2 ? ", " : "") << kLimitDecimals[r - 2];
            if (formulas_ok) got << (r > 2 ? ", " : "") << limits[r - 2].decimal(10);
        }
        add(rep, "limit-table-decimals", want.str(), ok ? got.str() : "unavailable");
    }
    {
        bool ok = formulas_ok;
        if (ok) {
            Rational base(5, 27);
            for (int r = 2; r <= max_r && ok; ++r)
                ok = limits[r - 2] == Rational(r) * base.pow(r - 1);
        }
        add(rep, "limit-identity-r-powers", "B_r = r*(5/27)^(r-1)",
            ok_or("B_r = r*(5/27)^(r-1)", ok, "identity fails"));
    }

    // --- the algebraic equation ------------------------------------------------
    QuarticEquation Q = quartic();
    {
        int N = static_cast<int>(std::min(max_n, 200L));
        Series g = tutte_series(N);
        Series total(N);
        std::vector<Series> pw{Series::one(N)};
        for (int j = 1; j <= Q.P.degree_y(); ++j) pw.push_back(pw.back() * g);
        for (const auto& [key, c] : Q.P.terms())
            for (int n = key.first; n <= N; ++n)
                total.set_coeff(n, total.coeff(n) + c * pw[key.second].coeff(n - key.first));
        add(rep, "algeq-annihilates-series", "residual zero",
            ok_or("residual zero", total.is_zero(), "nonzero residual"));
    }
    {
        GuessConfig cfg;
        auto P = guess_algeq(tutte_series(60), 4, 3, cfg);
        add(rep, "algeq-recovered-by-guessing", Q.P.str("x", "y"),
            P ? P->str("x", "y") : "none found");
    }

    // --- differential/recurrence pipeline ---------------------------------------
    {
        bool ok = false;
        std::string detail = "pipeline failed";
        try {
            LinearODE ode = algeq_to_ode(AlgebraicEquation{Q.P});
            Recurrence rec = ode_to_rec(ode);
            long N = std::min(max_n, 500L);
            std::vector<Rational> t;
            Series g = tutte_series(static_cast<int>(N));
            for (long n = 0; n <= N; ++n) t.push_back(g.coeff(n));
            auto fail = rec_check(rec, t, 1);
            ok = ode.order() <= 4 && !fail;
            detail = ok ? "order <= 4, annihilates coefficients"
                        : (fail ? "residual at n=" + std::to_string(*fail)
                                : "order " + std::to_string(ode.order()));
        } catch (const std::exception& e) {
            detail = e.what();
        }
        add(rep, "ode-recurrence-pipeline", "order <= 4, annihilates coefficients", detail);
    }

    // --- evaluation at 27/256 -----------------------------------------------------
    {
        auto roots = eval_quartic_at(Rational(27, 256));
        bool found = false;
        for (const auto& r : roots)
            if (r == Rational(5, 27)) found = true;
        add(rep, "algeq-root-at-27-256", "contains 5/27",
            ok_or("contains 5/27", found, "missing"));
        double ps = g_partial_sum(27.0 / 256.0, 2000);
        bool close = std::fabs(ps - 5.0 / 27.0) < 1e-5;
        add(rep, "partial-sum-at-27-256", "within 1e-5 of 5/27",
            ok_or("within 1e-5 of 5/27", close, "off by more"));
    }
    {
        CritiqueReport cr = critique_check();
        bool ok = std::fabs(cr.jr_value - 1.253754) < 1e-5 && cr.jr_value > 1.0 &&
                  std::fabs(cr.jr_value - cr.c_value) > 0.5;
        add(rep, "float-critique", "1.253754 within 1e-5, > 1, far from 10/27",
            ok_or("1.253754 within 1e-5, > 1, far from 10/27", ok, "unexpected value"));
    }

    // --- telescoping ------------------------------------------------------------
    {
        HyperTerm2 term = convolution_term();
        auto cert = zeilberger(term, 4);
        add(rep, "telescoped-operator-order", "order 2",
            cert ? "order " + std::to_string(cert->op.order()) : "none found");
        add(rep, "telescoped-certificate-symbolic", "identity holds",
            ok_or("identity holds", cert && verify_certificate(term, *cert),
                  "identity fails"));

        long hi = std::min(max_n, 300L);
        if (cert) {
            auto fail = numeric_sum_check(term, cert->op, 3, hi);
            // the telescoped operator tracks the unrestricted bilateral sum;
            // on the support-restricted sums it leaves a boundary residual,
            // so this check records an honest failure
            add(rep, "telescoped-operator-on-sums", "all residuals zero",
                fail ? "residual at n=" + std::to_string(*fail) : "all residuals zero");

            std::vector<Rational> rhs; // t(n) * A_2(n), n = 0.. (0 for n < 1)
            RatFun f2 = printed_ratio_formula(2);
            Series g = tutte_series(static_cast<int>(hi));
            rhs.push_back(Rational(0));
            for (long n = 1; n <= hi; ++n) rhs.push_back(g.coeff(n) * f2.eval(Rational(n)));
            auto fail2 = rec_check(cert->op, rhs, 1);
            add(rep, "telescoped-operator-on-product-formula", "all residuals zero",
                fail2 ? "residual at n=" + std::to_string(*fail2) : "all residuals zero");

            auto cert3 = sum_recurrence(term, *cert);
            bool ok3 = false;
            std::string detail = "none found";
            if (cert3) {
                auto f3 = numeric_sum_check(term, cert3->op, 2, hi);
                auto f4 = rec_check(cert3->op, rhs, 1);
                ok3 = verify_certificate(term, *cert3) && !f3 && !f4;
                // unroll from initial sums and compare against convolution
                if (ok3) {
                    long s = cert3->op.valid_from;
                    std::vector<Rational> init;
                    for (long n = s; n < s + cert3->op.order(); ++n) init.push_back(term.sum(n));
                    auto un = rec_unroll(cert3->op, init, s, static_cast<std::size_t>(hi - s + 1));
                    for (long n = s; n <= hi && ok3; ++n)
                        if (un[n - s] != term.sum(n)) ok3 = false;
                }
                detail = ok3 ? "verified" : "found but checks fail";
            }
            add(rep, "boundary-corrected-sum-recurrence",
                "verified", detail);
        }
    }

    // --- engine property checks ----------------------------------------------------
    {
        Series g = tutte_series(12);
        bool ok = true;
        for (int r = 2; r <= 5 && ok; ++r) {
            Series p = g.pow(r);
            for (long n = 1; n <= 12 && ok; ++n)
                if (p.coeff(n) != power_coeff_bruteforce(r, n)) ok = false;
        }
        add(rep, "series-power-vs-composition-sums", "agree for n <= 12, r <= 5",
            ok_or("agree for n <= 12, r <= 5", ok, "disagree"));
    }
    {
        PolyQ k = PolyQ::variable();
        auto r1 = gosper({RatFun((k + PolyQ(1)) * (k + PolyQ(1)), k)});
        auto r2 = gosper({RatFun(k + PolyQ(1), k)});
        auto r3 = gosper({RatFun(k + PolyQ(1))});
        bool ok = r1 && *r1 == RatFun(PolyQ(1), k) &&
                  r2 && *r2 == RatFun(PolyQ{Rational(-1, 2), Rational(1, 2)}) &&
                  !r3;
        add(rep, "indefinite-summation-corpus", "two summable, one not",
            ok_or("two summable, one not", ok, "unexpected outcome"));
    }
    {
        // planted recurrence: a(n+2) = (n+1) a(n+1) + 3 a(n)
        std::vector<Rational> seq{Rational(1), Rational(1)};
        while (seq.size() < 70) {
            long n = static_cast<long>(seq.size()) - 2;
            seq.push_back(Rational(n + 1) * seq[seq.size() - 1] + Rational(3) * seq[seq.size() - 2]);
        }
        GuessConfig cfg;
        cfg.max_order = 3;
        cfg.max_poly_degree = 3;
        auto rec = guess_recurrence(seq, cfg);
        bool ok = rec && rec->order() == 2 && !rec_check(*rec, seq, 0);
        add(rep, "guess-soundness-planted-recurrence", "order 2, annihilates all data",
            ok_or("order 2, annihilates all data", ok, "unsound or missing"));
    }

    return rep;
}

} // namespace tq
