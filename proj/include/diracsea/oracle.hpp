#pragma once

// Brute-force reference paths: direct integration of the two-amplitude Dirac
// system and a general semi-infinite quadrature. Neither touches the
// hypergeometric machinery.

#include <functional>

#include "diracsea/modes.hpp"

namespace diracsea {

/// Integration window for the amplitude ODE. t_start stands in for t -> -inf.
struct OdeRun {
    double t_start = -30.0;
    double t_end = 0.0;
    double tol = 1e-12;
    long max_steps = 2'000'000;

    /// Window starting where R(t) drops to `seed_threshold`.
    static OdeRun seeded(const PhysParams& params, double t_end = 0.0, double seed_threshold = 1e-12);

    void validate() const;
};

struct OdeReport {
    long steps = 0;
    long rejected = 0;
    double norm_drift = 0.0; // |norm(end) - norm(start)|
};

/// Largest R(t_start) accepted as "field still off".
inline constexpr double kSeedRegimeLimit = 1e-10;

/// Integrates i d/dt (C, D) = (p - A(t)) (D, C) + m (C, -D) from the
/// asymptotic free state at run.t_start to run.t_end.
ModeState evolve_ode(const ModeIndex& mode, const PhysParams& params, const OdeRun& run,
                     OdeReport* report = nullptr);

struct QuadResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    double upper_u = 0.0; // last panel edge in the substituted variable
    int evaluations = 0;
};

/// Integral over [0, inf) after p = scale * sinh(u). Unit-width panels in u are
/// integrated adaptively (Gauss-Kronrod 7/15) and appended until the
/// geometric tail estimate drops below tol * |total|. Throws NonConvergence
/// when the panels stop shrinking before u = 700.
QuadResult quad_semi_infinite_detailed(const std::function<double(double)>& integrand, double tol,
                                       double scale = 1.0);

double quad_semi_infinite(const std::function<double(double)>& integrand, double tol, double scale = 1.0);

/// Adaptive Gauss-Kronrod 7/15 on a finite interval to absolute accuracy `abs_tol`.
double quad_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int* evaluations = nullptr);

} // namespace diracsea
