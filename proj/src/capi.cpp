#include "tutteq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "tutteq/census.hpp"
#include "tutteq/guess.hpp"
#include "tutteq/parser.hpp"
#include "tutteq/report.hpp"

using nlohmann::json;

struct tq_session {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class Fn>
tq_status guarded(tq_session* s, Fn&& fn) {
    if (!s) return TQ_EINVAL;
    s->last_error.clear();
    try {
        return fn();
    } catch (const tq::parse_error& e) {
        s->last_error = e.what();
        return TQ_EINVAL;
    } catch (const std::domain_error& e) {
        s->last_error = e.what();
        return TQ_EDOMAIN;
    } catch (const std::invalid_argument& e) {
        s->last_error = e.what();
        return TQ_EINVAL;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return TQ_EINTERNAL;
    }
}

json rec_to_json(const tq::Recurrence& rec) {
    json coeffs = json::array();
    for (const auto& p : rec.coeffs) coeffs.push_back(tq::print_poly(p, "n"));
    return json{{"order", rec.order()}, {"valid_from", rec.valid_from}, {"coeffs", coeffs}};
}

} // namespace

extern "C" {

tq_session* tq_session_new(void) { return new (std::nothrow) tq_session; }

void tq_session_free(tq_session* s) { delete s; }

const char* tq_last_error(const tq_session* s) {
    return s ? s->last_error.c_str() : "null session";
}

void tq_string_free(char* p) { std::free(p); }

tq_status tq_coeff(tq_session* s, long n, char** out) {
    return guarded(s, [&] {
        if (!out) return TQ_EINVAL;
        *out = dup_string(tq::tutte_coeff(n).str());
        return TQ_OK;
    });
}

tq_status tq_power_coeff(tq_session* s, int r, long n, char** out) {
    return guarded(s, [&] {
        if (!out || r < 1 || n < 0) {
            s->last_error = "need r >= 1 and n >= 0";
            return TQ_EINVAL;
        }
        tq::Series g = tq::tutte_series(static_cast<int>(n));
        *out = dup_string(g.pow(r).coeff(n).str());
        return TQ_OK;
    });
}

tq_status tq_ratio(tq_session* s, int r, long n, char** out) {
    return guarded(s, [&] {
        if (!out || r < 2 || n < 1) {
            s->last_error = "need r >= 2 and n >= 1";
            return TQ_EINVAL;
        }
        *out = dup_string(tq::ratio_A(r, n).str());
        return TQ_OK;
    });
}

tq_status tq_closed_form(tq_session* s, int r, char** out_formula, char** out_limit) {
    return guarded(s, [&] {
        if (!out_formula || !out_limit || r < 2) {
            s->last_error = "need r >= 2";
            return TQ_EINVAL;
        }
        tq::RatioReport rep = tq::closed_form_A(r);
        *out_formula = dup_string(tq::print_ratfun(*rep.formula, "n"));
        *out_limit = dup_string(rep.limit ? rep.limit->str() : "none");
        return TQ_OK;
    });
}

tq_status tq_limit(tq_session* s, int r, char** out) {
    return guarded(s, [&] {
        if (!out || r < 2) {
            s->last_error = "need r >= 2";
            return TQ_EINVAL;
        }
        *out = dup_string(tq::limit_B(r).str());
        return TQ_OK;
    });
}

tq_status tq_table(tq_session* s, int max_r, int decimals, char** out_json) {
    return guarded(s, [&] {
        if (!out_json || max_r < 2 || decimals < 1) {
            s->last_error = "need max_r >= 2 and decimals >= 1";
            return TQ_EINVAL;
        }
        json rows = json::array();
        for (const auto& row : tq::b_table(max_r, decimals))
            rows.push_back({{"r", row.r}, {"fraction", row.fraction}, {"decimal", row.decimal}});
        *out_json = dup_string(rows.dump());
        return TQ_OK;
    });
}

tq_status tq_guess_algeq(tq_session* s, int terms, int deg_y, int deg_x, char** out) {
    return guarded(s, [&] {
        if (!out || terms < 1 || deg_y < 1 || deg_x < 0) {
            s->last_error = "need terms >= 1, deg_y >= 1, deg_x >= 0";
            return TQ_EINVAL;
        }
        tq::GuessConfig cfg;
        auto P = tq::guess_algeq(tq::tutte_series(terms), deg_y, deg_x, cfg);
        if (!P) {
            s->last_error = "no equation found within degree bounds";
            return TQ_ENOTFOUND;
        }
        *out = dup_string(P->str("x", "y"));
        return TQ_OK;
    });
}

tq_status tq_algeq_to_ode(tq_session* s, char** out_json) {
    return guarded(s, [&] {
        if (!out_json) return TQ_EINVAL;
        tq::LinearODE ode = tq::algeq_to_ode(tq::AlgebraicEquation{tq::quartic().P});
        json coeffs = json::array();
        for (const auto& p : ode.coeffs) coeffs.push_back(tq::print_poly(p, "x"));
        json j{{"order", ode.order()}, {"coeffs", coeffs}};
        *out_json = dup_string(j.dump());
        return TQ_OK;
    });
}

tq_status tq_ode_to_rec(tq_session* s, char** out_json) {
    return guarded(s, [&] {
        if (!out_json) return TQ_EINVAL;
        tq::Recurrence rec =
            tq::ode_to_rec(tq::algeq_to_ode(tq::AlgebraicEquation{tq::quartic().P}));
        *out_json = dup_string(rec_to_json(rec).dump());
        return TQ_OK;
    });
}

tq_status tq_zeilberger(tq_session* s, int max_order, char** out_json) {
    return guarded(s, [&] {
        if (!out_json || max_order < 0) return TQ_EINVAL;
        tq::HyperTerm2 term = tq::convolution_term();
        auto cert = tq::zeilberger(term, max_order);
        if (!cert) {
            s->last_error = "no telescoped operator within the order bound";
            return TQ_ENOTFOUND;
        }
        json j = rec_to_json(cert->op);
        j.erase("valid_from");
        j["certificate"] = cert->R.str("n", "k");
        j["certificate_valid"] = tq::verify_certificate(term, *cert);
        if (auto sum = tq::sum_recurrence(term, *cert)) {
            j["sum_order"] = sum->op.order();
            json sc = json::array();
            for (const auto& p : sum->op.coeffs) sc.push_back(tq::print_poly(p, "n"));
            j["sum_coeffs"] = sc;
            j["sum_valid_from"] = sum->op.valid_from;
            j["sum_certificate"] = sum->R.str("n", "k");
        }
        *out_json = dup_string(j.dump());
        return TQ_OK;
    });
}

tq_status tq_eval_quartic(tq_session* s, const char* x0, char** out_json) {
    return guarded(s, [&] {
        if (!out_json || !x0) return TQ_EINVAL;
        tq::Rational x = tq::Rational::from_string(x0);
        json roots = json::array();
        for (const auto& r : tq::eval_quartic_at(x)) roots.push_back(r.str());
        *out_json = dup_string(roots.dump());
        return TQ_OK;
    });
}

tq_status tq_critique(tq_session* s, char** out_json) {
    return guarded(s, [&] {
        if (!out_json) return TQ_EINVAL;
        tq::CritiqueReport rep = tq::critique_check();
        json j{{"jr_value", rep.jr_value}, {"c_value", rep.c_value}, {"verdict", rep.verdict}};
        *out_json = dup_string(j.dump());
        return TQ_OK;
    });
}

tq_status tq_verify_all(tq_session* s, long max_n, int max_r, char** out_json) {
    return guarded(s, [&] {
        if (!out_json || max_n < 10 || max_r < 2) {
            s->last_error = "need max_n >= 10 and max_r >= 2";
            return TQ_EINVAL;
        }
        tq::SuiteReport rep = tq::run_verify_suite(max_n, max_r);
        json items = json::array();
        for (const auto& it : rep.items)
            items.push_back({{"name", it.name},
                             {"expected", it.expected},
                             {"actual", it.actual},
                             {"pass", it.pass}});
        json j{{"all_pass", rep.all_pass()}, {"items", items}};
        *out_json = dup_string(j.dump());
        return TQ_OK;
    });
}

} // extern "C"
