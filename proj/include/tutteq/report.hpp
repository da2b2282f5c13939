#ifndef TUTTEQ_REPORT_HPP
#define TUTTEQ_REPORT_HPP

#include <string>
#include <vector>

#include "tutteq/census.hpp"

namespace tq {

struct SuiteItem {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::vector<SuiteItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

/// The full verification suite: every reproduced value and identity, plus the
/// engine property checks. Ranges scale with max_n / max_r.
SuiteReport run_verify_suite(long max_n, int max_r);

struct BTableRow {
    int r = 0;
    std::string fraction;
    std::string decimal;
};

/// Exact limits B_r with decimal rendering at the given significant digits.
std::vector<BTableRow> b_table(int max_r, int decimals);

/// Reference values the suite checks against (exact fractions and their
/// 10-digit decimals for r = 2..11).
const std::vector<std::string>& reference_limit_fractions();
const std::vector<std::string>& reference_limit_decimals();

} // namespace tq

#endif
