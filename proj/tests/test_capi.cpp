#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "tutteq.h"

using nlohmann::json;

namespace {

std::string take(char* p) {
    REQUIRE(p != nullptr);
    std::string s = p;
    tq_string_free(p);
    return s;
}

struct Session {
    tq_session* s = tq_session_new();
    ~Session() { tq_session_free(s); }
};

} // namespace

TEST_CASE("session lifecycle and simple values") {
    Session ses;
    REQUIRE(ses.s != nullptr);
    char* out = nullptr;
    CHECK(tq_coeff(ses.s, 5, &out) == TQ_OK);
    CHECK(take(out) == "399");
    CHECK(tq_coeff(ses.s, -2, &out) == TQ_OK);
    CHECK(take(out) == "0");
    CHECK(tq_power_coeff(ses.s, 2, 4, &out) == TQ_OK);
    CHECK(take(out) == "35");
    CHECK(tq_ratio(ses.s, 2, 3, &out) == TQ_OK);
    CHECK(take(out) == "6/13");
}

TEST_CASE("closed form and limits") {
    Session ses;
    char *formula = nullptr, *limit = nullptr;
    CHECK(tq_closed_form(ses.s, 2, &formula, &limit) == TQ_OK);
    CHECK(take(limit) == "10/27");
    CHECK(take(formula).find("n") != std::string::npos);
    char* out = nullptr;
    CHECK(tq_limit(ses.s, 4, &out) == TQ_OK);
    CHECK(take(out) == "500/19683");
    CHECK(tq_table(ses.s, 4, 10, &out) == TQ_OK);
    json rows = json::parse(take(out));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["fraction"] == "10/27");
    CHECK(rows[0]["decimal"] == "0.3703703704");
}

TEST_CASE("equation plumbing") {
    Session ses;
    char* out = nullptr;
    CHECK(tq_guess_algeq(ses.s, 60, 4, 3, &out) == TQ_OK);
    std::string eq = take(out);
    CHECK(eq.find("y^4") != std::string::npos);
    CHECK(tq_algeq_to_ode(ses.s, &out) == TQ_OK);
    json ode = json::parse(take(out));
    CHECK(ode["order"].get<int>() <= 4);
    CHECK(tq_ode_to_rec(ses.s, &out) == TQ_OK);
    json rec = json::parse(take(out));
    CHECK(rec["coeffs"].size() == rec["order"].get<std::size_t>() + 1);
    CHECK(tq_eval_quartic(ses.s, "27/256", &out) == TQ_OK);
    json roots = json::parse(take(out));
    bool found = false;
    for (const auto& r : roots)
        if (r == "5/27") found = true;
    CHECK(found);
}

TEST_CASE("critique payload") {
    Session ses;
    char* out = nullptr;
    CHECK(tq_critique(ses.s, &out) == TQ_OK);
    json j = json::parse(take(out));
    CHECK(j["jr_value"].get<double>() == doctest::Approx(1.253754).epsilon(1e-5));
    CHECK(j["c_value"].get<double>() == doctest::Approx(10.0 / 27.0));
}

TEST_CASE("error reporting") {
    Session ses;
    char* out = nullptr;
    CHECK(tq_coeff(ses.s, 5, nullptr) == TQ_EINVAL);
    CHECK(tq_ratio(ses.s, 1, 3, &out) == TQ_EINVAL);
    CHECK(std::string(tq_last_error(ses.s)).size() > 0);
    CHECK(tq_eval_quartic(ses.s, "not-a-number", &out) == TQ_EINVAL);
    CHECK(tq_ratio(ses.s, 2, 3, &out) == TQ_OK); // session still usable
    take(out);
}
