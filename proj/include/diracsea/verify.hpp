#pragma once

// Property suite shared by `diracsea verify` and the acceptance binary.
// Every check runs in the reference regime m = 1, c = -1 with its own alpha
// values; only the numerical tolerances come from the caller, so loosening
// them is a fault the suite must catch.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diracsea/modes.hpp"

namespace diracsea::verify {

struct Tolerances {
    double series_tol = 1e-13;
    double ode_tol = 1e-12;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct GroupResult {
    std::string name;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
};

struct Report {
    std::vector<GroupResult> groups;
    double seconds = 0.0;

    bool passed() const;
};

// One function per property. Exceptions are caught and reported as failures.
CheckResult oracle_equivalence(const Tolerances& tol);
CheckResult norm_conservation(const Tolerances& tol);
CheckResult perturbative_closure(const Tolerances& tol);
CheckResult ratio_identities(const Tolerances& tol);
CheckResult residual_scaling(const Tolerances& tol);
CheckResult pair_cancellation(const Tolerances& tol);
CheckResult vacuum_density(const Tolerances& tol);
CheckResult initial_condition_limit(const Tolerances& tol);
CheckResult free_evolution(const Tolerances& tol);
CheckResult special_functions(const Tolerances& tol);

/// Group names in run order.
const std::vector<std::string>& group_names();

/// Runs every group, or only `group` when non-empty. Throws InvalidParams for
/// an unknown group. Progress lines go to `log` when given.
Report run(const Tolerances& tol, std::string_view group = {}, std::ostream* log = nullptr);

} // namespace diracsea::verify
