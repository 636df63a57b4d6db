#pragma once

// Closed-form evolution of a single mode through the exponentially switched
// linear potential. For t <= 0 the amplitudes are
//
//   C = e^{-iR/2} R^{i lambda mu} [ (m - p + lambda E) Phi + c R Phi' ]
//   D = e^{-iR/2} R^{i lambda mu} [ (m + p - lambda E) Phi - c R Phi' ]
//
// with Phi = 1F1(J; K; iR), J = (i/c)(lambda E - p), K = 1 + 2 i lambda E / c,
// mu = E/c, R(t) = (2 alpha / c) e^{-ct}. For t >= 0 the field is off and the
// state evolves freely from its t = 0 value.

#include "diracsea/modes.hpp"

namespace diracsea {

struct SwitchProfile {
    double R = 0.0; // dimensionless argument scale, (2 alpha / c) e^{-ct}
    double A = 0.0; // momentum shift, c R / 2 = alpha e^{-ct}
};

/// R and A at time t. Uses the t <= 0 formula at any t; for t > 0 callers
/// freeze A at A(0) because the field is off.
SwitchProfile switch_profile(const PhysParams& params, double t);

/// V(z, t) = -z c alpha (1 - theta(t)) e^{-ct}, with theta(0) = 1.
double potential(const PhysParams& params, double z, double t);

/// Electric field -dV/dz = c alpha (1 - theta(t)) e^{-ct}.
double field(const PhysParams& params, double t);

struct ExactCoeffs {
    Complex J;
    Complex K;
    double mu = 0.0;
    Complex eta;
    double R = 0.0;
    double A = 0.0;
    double log_R = 0.0; // ln R evaluated as ln(2 alpha / c) - c t, finite even when R underflows
};

ExactCoeffs exact_coeffs(const ModeIndex& mode, const PhysParams& params, double t);

/// Closed-form state at t <= 0. Throws DomainError for t > 0.
ModeState evolve_exact(const ModeIndex& mode, const PhysParams& params, double t);

/// The t -> -inf form e^{i lambda mu ln(2 alpha/c)} e^{-i lambda E t} (m - p + lambda E, m + p - lambda E).
ModeState asymptotic_state(const ModeIndex& mode, const PhysParams& params, double t);

/// Propagate a t = 0 state under H0 at its frozen momentum p - alpha.
ModeState free_evolve(const ModeState& state0, const PhysParams& params, double t);

/// Closed form for t <= 0, free propagation for t > 0.
ModeState evolve(const ModeIndex& mode, const PhysParams& params, double t);

/// Earliest time at which R(t) equals `threshold`; used to stand in for t -> -inf.
double seed_time(const PhysParams& params, double threshold = 1e-12);

} // namespace diracsea
