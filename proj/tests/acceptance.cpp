#include <cstdio>
#include <iostream>

#include "annihilator/annihilator.hpp"
#include "cli/cli.hpp"

namespace {

int failures = 0;

void line(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

}  // namespace

int main() {
    using oscrep::Config;

    // Fixed oracles, independent of the suite bookkeeping.
    const std::vector<std::pair<Config, int>> gk = {
        {{3, 1, 2, -1, -1}, 3}, {{4, 2, 2, -1, -1}, 4}, {{3, 1, 3, 2, 1}, 2}};
    for (const auto& [c, d] : gk) line(annihilator::gk_expected(c) == d, "oracle: expected GK dimension of " + c.str());
    {
        Config c{5, 1, 3, -1, -1};
        auto w = oscrep::weight(c, oscrep::xv(c, 1) * oscrep::yv(c, 4));
        const std::vector<exactpoly::Q> want{-2, 0, -2, 1};
        line(w && *w == want, "oracle: weight of x1 y4 on " + c.str() + " is (-2, 0, -2, 1)");
    }

    auto records = cli::acceptance_suite(0, [](const std::string& m) { std::cerr << m << std::endl; });
    for (const auto& r : records) {
        std::string detail = r.name;
        if (!r.reason.empty()) detail += " (" + r.reason + ")";
        line(r.status == cli::Status::Pass, detail);
    }
    line(records.size() == 13, "all 13 criteria ran");
    std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: PASS");
    return failures ? 1 : 0;
}
