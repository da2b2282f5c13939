#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutteq.h"

using nlohmann::json;

namespace {

struct Item {
    std::string name, expected, actual;
    bool pass = true;
};

struct Run {
    std::string command;
    std::string status = "value"; // "pass" | "fail" | "value"
    std::vector<Item> items;
};

std::string take(char* p) {
    std::string s = p ? p : "";
    tq_string_free(p);
    return s;
}

// value-producing call: one item, status "value"
void add_value(Run& run, const std::string& name, std::string value) {
    run.items.push_back({name, "", std::move(value), true});
}

json to_json(const Run& run, long elapsed_ms) {
    json items = json::array();
    for (const auto& it : run.items)
        items.push_back({{"name", it.name},
                         {"expected", it.expected},
                         {"actual", it.actual},
                         {"pass", it.pass}});
    return json{{"command", run.command},
                {"status", run.status},
                {"items", items},
                {"elapsed_ms", elapsed_ms}};
}

void print_human(const Run& run) {
    if (run.status == "value") {
        for (const auto& it : run.items) {
            if (run.items.size() > 1) std::cout << it.name << ": ";
            std::cout << it.actual << "\n";
        }
        return;
    }
    for (const auto& it : run.items)
        std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.name << ": expected "
                  << it.expected << ", got " << it.actual << "\n";
    std::cout << (run.status == "pass" ? "all checks passed" : "SOME CHECKS FAILED")
              << "\n";
}

int fail_with(tq_session* s, const std::string& command, tq_status st) {
    std::cerr << command << ": error (" << st << "): " << tq_last_error(s) << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reconstruction toolkit for the triangulation series"};
    app.require_subcommand(1);

    bool json_out = false;
    std::string out_path;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--out", out_path, "also write the machine-readable stream to PATH");

    long max_n = 300, arg_n = 1;
    int max_r = 11, arg_r = 2, decimals = 10, terms = 60, deg_y = 4, deg_x = 3,
        max_order = 4;
    std::string arg_x = "27/256";

    auto* c_verify = app.add_subcommand("verify-all", "run the full verification suite");
    c_verify->add_option("--max-n", max_n, "sequence range bound");
    c_verify->add_option("--max-r", max_r, "largest power checked");

    auto* c_table = app.add_subcommand("table", "exact limits and decimals per power");
    c_table->add_option("--max-r", max_r, "largest power");
    c_table->add_option("--decimals", decimals, "significant digits");

    auto* c_coeff = app.add_subcommand("coeff", "series coefficient t(n)");
    c_coeff->add_option("--n", arg_n)->required();

    auto* c_pcoeff = app.add_subcommand("power-coeff", "[x^n] of the r-th power");
    c_pcoeff->add_option("--r", arg_r)->required();
    c_pcoeff->add_option("--n", arg_n)->required();

    auto* c_ratio = app.add_subcommand("ratio", "A_r(n) = [x^n]g^r / [x^n]g");
    c_ratio->add_option("--r", arg_r)->required();
    c_ratio->add_option("--n", arg_n)->required();

    auto* c_closed = app.add_subcommand("closed-form", "A_r as a rational function of n");
    c_closed->add_option("--r", arg_r)->required();

    auto* c_limit = app.add_subcommand("limit", "B_r = lim A_r(n)");
    c_limit->add_option("--r", arg_r)->required();

    auto* c_galg = app.add_subcommand("guess-algeq", "recover the algebraic equation");
    c_galg->add_option("--terms", terms, "series coefficients used");
    c_galg->add_option("--deg-y", deg_y);
    c_galg->add_option("--deg-x", deg_x);

    app.add_subcommand("algeq2ode", "linear ODE from the algebraic equation");
    app.add_subcommand("ode2rec", "coefficient recurrence of that ODE");

    auto* c_zeil = app.add_subcommand("zeilberger",
                                      "creative telescoping for the convolution sum");
    c_zeil->add_option("--max-order", max_order);

    auto* c_evalq = app.add_subcommand("eval-quartic", "rational roots at a point");
    c_evalq->add_option("--x", arg_x, "evaluation point, p/q");

    app.add_subcommand("critique", "floating cross-check of the published constant");

    // allow --json / --out after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    tq_session* s = tq_session_new();
    if (!s) {
        std::cerr << "out of memory\n";
        return 2;
    }
    auto started = std::chrono::steady_clock::now();

    Run run;
    run.command = app.get_subcommands().front()->get_name();
    tq_status st = TQ_OK;
    char *a = nullptr, *b = nullptr;

    if (c_verify->parsed()) {
        st = tq_verify_all(s, max_n, max_r, &a);
        if (st == TQ_OK) {
            json j = json::parse(take(a));
            run.status = j["all_pass"].get<bool>() ? "pass" : "fail";
            for (const auto& it : j["items"])
                run.items.push_back({it["name"], it["expected"], it["actual"], it["pass"]});
        }
    } else if (c_table->parsed()) {
        st = tq_table(s, max_r, decimals, &a);
        if (st == TQ_OK) {
            json rows = json::parse(take(a));
            for (const auto& row : rows)
                add_value(run, "r=" + std::to_string(row["r"].get<int>()),
                          row["fraction"].get<std::string>() + ", " +
                              row["decimal"].get<std::string>());
        }
    } else if (c_coeff->parsed()) {
        st = tq_coeff(s, arg_n, &a);
        if (st == TQ_OK) add_value(run, "coeff", take(a));
    } else if (c_pcoeff->parsed()) {
        st = tq_power_coeff(s, arg_r, arg_n, &a);
        if (st == TQ_OK) add_value(run, "power-coeff", take(a));
    } else if (c_ratio->parsed()) {
        st = tq_ratio(s, arg_r, arg_n, &a);
        if (st == TQ_OK) add_value(run, "ratio", take(a));
    } else if (c_closed->parsed()) {
        st = tq_closed_form(s, arg_r, &a, &b);
        if (st == TQ_OK) {
            add_value(run, "formula", take(a));
            add_value(run, "limit", take(b));
        }
    } else if (c_limit->parsed()) {
        st = tq_limit(s, arg_r, &a);
        if (st == TQ_OK) add_value(run, "limit", take(a));
    } else if (c_galg->parsed()) {
        st = tq_guess_algeq(s, terms, deg_y, deg_x, &a);
        if (st == TQ_OK) add_value(run, "equation", take(a));
    } else if (app.get_subcommand("algeq2ode")->parsed()) {
        st = tq_algeq_to_ode(s, &a);
        if (st == TQ_OK) add_value(run, "ode", take(a));
    } else if (app.get_subcommand("ode2rec")->parsed()) {
        st = tq_ode_to_rec(s, &a);
        if (st == TQ_OK) add_value(run, "recurrence", take(a));
    } else if (c_zeil->parsed()) {
        st = tq_zeilberger(s, max_order, &a);
        if (st == TQ_OK) add_value(run, "telescoping", take(a));
    } else if (c_evalq->parsed()) {
        st = tq_eval_quartic(s, arg_x.c_str(), &a);
        if (st == TQ_OK) add_value(run, "roots", take(a));
    } else { // critique
        st = tq_critique(s, &a);
        if (st == TQ_OK) add_value(run, "critique", take(a));
    }

    if (st != TQ_OK) {
        int rc = fail_with(s, run.command, st);
        tq_session_free(s);
        return rc;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    json payload = to_json(run, elapsed);
    if (json_out) std::cout << payload.dump(2) << "\n";
    else print_human(run);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << payload.dump(2) << "\n";
    }
    tq_session_free(s);
    return run.status == "fail" ? 1 : 0;
}
