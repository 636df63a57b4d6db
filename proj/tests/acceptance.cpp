// One line per acceptance criterion, then the runtime budget. Exit status is
// non-zero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "diracsea/verify.hpp"

namespace v = diracsea::verify;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool passed, const std::string& detail, double seconds)
{
    std::printf("%s %d %s: %s (%.3f s)\n", passed ? "PASS" : "FAIL", id, title, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!passed)
        ++failures;
}

double since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void criterion(int id, const char* title, std::initializer_list<v::CheckResult (*)(const v::Tolerances&)> checks,
               double budget_s = 0.0)
{
    const v::Tolerances tol;
    const auto t0 = clock_type::now();
    bool ok = true;
    std::string detail;
    for (auto check : checks) {
        const auto r = check(tol);
        ok = ok && r.passed;
        if (!detail.empty())
            detail += "; ";
        detail += r.detail;
    }
    const double s = since(t0);
    if (budget_s > 0.0) {
        ok = ok && s <= budget_s;
        char buf[64];
        std::snprintf(buf, sizeof buf, "; runtime limit %.0f s", budget_s);
        detail += buf;
    }
    report(id, title, ok, detail, s);
}

} // namespace

int main()
{
    criterion(1, "exact-oracle equivalence", {v::oracle_equivalence}, 10.0);
    criterion(2, "norm conservation", {v::norm_conservation});
    criterion(3, "perturbative closure and ratio identities", {v::perturbative_closure, v::ratio_identities});
    criterion(4, "third-order residual scaling", {v::residual_scaling});
    criterion(5, "pair cancellation and negativity", {v::pair_cancellation});
    criterion(6, "vacuum energy density", {v::vacuum_density});
    criterion(7, "initial-condition limit", {v::initial_condition_limit});
    criterion(8, "free evolution", {v::free_evolution});
    criterion(9, "special functions", {v::special_functions});

    const auto t0 = clock_type::now();
    const auto full = v::run(v::Tolerances{});
    const double s = since(t0);
    report(10, "full verify suite", full.passed() && s <= 60.0,
           std::to_string(full.groups.size()) + " groups, limit 60 s", s);

    std::printf("%s: %d failing line(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
