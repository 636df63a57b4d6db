#include "diracsea/modes.hpp"

#include <cmath>

#include "diracsea/errors.hpp"

namespace diracsea {

void PhysParams::validate() const
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw InvalidParams("mass m must be positive and finite");
    if (!(cdecay < 0.0) || !std::isfinite(cdecay))
        throw InvalidParams("switch rate c must be negative and finite");
    if (!std::isfinite(alpha))
        throw InvalidParams("alpha must be finite");
    if (alpha * cdecay < 0.0)
        throw InvalidParams("alpha*c must be positive (alpha and c need the same sign)");
    if (!(series_tol > 0.0) || !(ode_tol > 0.0))
        throw InvalidParams("tolerances must be positive");
    if (series_max_terms < 2)
        throw InvalidParams("series_max_terms must be >= 2");
}

void ModeIndex::validate() const
{
    if (lambda != 1 && lambda != -1)
        throw InvalidParams("lambda must be +1 or -1");
    if (!std::isfinite(p))
        throw InvalidParams("momentum p must be finite");
}

double energy_gap(int lambda, double p, double m)
{
    const double e = dispersion(p, m);
    const double lp = lambda * p;
    return lp > 0.0 ? m * m / (e + lp) : e - lp;
}

Spinor2 free_spinor(const ModeIndex& mode, double m)
{
    const double e = dispersion(mode.p, m);
    Spinor2 u;
    if (mode.lambda == 1) {
        const double n = std::sqrt((e + m) / (2.0 * e));
        u << n, n * mode.p / (e + m);
    } else {
        // (E - m) = p^2 / (E + m) keeps the small component accurate near p = 0
        const double sgn = mode.p < 0.0 ? -1.0 : 1.0;
        const double small = std::abs(mode.p) / std::sqrt(2.0 * e * (e + m));
        u << small, -sgn * std::sqrt((e + m) / (2.0 * e));
    }
    return u;
}

double mode_energy(const ModeState& state, const PhysParams& params)
{
    const Complex c = state.C();
    const Complex d = state.D();
    const double cross = 2.0 * (std::conj(c) * d).real();
    const double diag = std::norm(c) - std::norm(d);
    return std::norm(state.eta) * (state.shifted_momentum * cross + params.m * diag);
}

double mode_norm(const ModeState& state)
{
    return std::norm(state.eta) * state.amp.squaredNorm();
}

} // namespace diracsea
