#pragma once

#include <iosfwd>
#include <string>

#include "diracsea/modes.hpp"
#include "diracsea/vacuum.hpp"

namespace diracsea::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, validation_error = 2, numerical_failure = 3 };

struct RunConfig {
    std::string subcommand; // mode-energy, sweep, vacuum, verify
    PhysParams params;
    int lambda = -1;
    bool both_signs = true; // sweep only: no --lambda given
    double p = 1.0;
    double t1 = 0.0;
    MomentumGrid grid;
    std::string out_path; // empty: CSV goes to stdout
    std::string group;
    double seed_threshold = 1e-12;

    /// Throws InvalidParams with a message naming the offending flag.
    void validate() const;
};

/// 17 significant digits, scientific.
std::string csv_number(double x);

/// Subcommand bodies. Each writes its CSV (and summary) to `out` and returns an exit code.
int run_mode_energy(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_vacuum(const RunConfig& cfg, std::ostream& out, std::ostream& summary);
int run_verify(const RunConfig& cfg, std::ostream& out);

/// Parses flags, dispatches, maps exceptions to exit codes and prints one
/// `error kind=... code=... message="..."` line on `err` for failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace diracsea::cli
