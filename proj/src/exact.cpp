#include "diracsea/exact.hpp"

#include <algorithm>
#include <cmath>

#include "diracsea/errors.hpp"
#include "diracsea/specfun.hpp"

namespace diracsea {

namespace {

constexpr Complex I{0.0, 1.0};

// ln(2 alpha / c); only meaningful for alpha != 0.
double log_amplitude(const PhysParams& params) { return std::log(2.0 * params.alpha / params.cdecay); }

// Constant phase e^{i lambda mu ln(2 alpha/c)} shared by the asymptotic amplitudes
// and (conjugated) by eta; unity in the field-free case.
Complex amplitude_phase(const ModeIndex& mode, const PhysParams& params)
{
    if (params.alpha == 0.0)
        return {1.0, 0.0};
    const double mu = dispersion(mode.p, params.m) / params.cdecay;
    return std::exp(I * (mode.lambda * mu * log_amplitude(params)));
}

Complex eta_of(const ModeIndex& mode, const PhysParams& params)
{
    const double e = dispersion(mode.p, params.m);
    const double gap = energy_gap(mode.lambda, mode.p, params.m);
    return std::conj(amplitude_phase(mode, params)) / std::sqrt(4.0 * e * gap);
}

} // namespace

SwitchProfile switch_profile(const PhysParams& params, double t)
{
    const double decay = std::exp(-params.cdecay * t);
    SwitchProfile sp;
    sp.R = 2.0 * params.alpha / params.cdecay * decay;
    sp.A = params.alpha * decay;
    return sp;
}

double potential(const PhysParams& params, double z, double t)
{
    if (t >= 0.0)
        return 0.0;
    return -z * params.cdecay * params.alpha * std::exp(-params.cdecay * t);
}

double field(const PhysParams& params, double t)
{
    if (t >= 0.0)
        return 0.0;
    return params.cdecay * params.alpha * std::exp(-params.cdecay * t);
}

ExactCoeffs exact_coeffs(const ModeIndex& mode, const PhysParams& params, double t)
{
    const double e = dispersion(mode.p, params.m);
    const double c = params.cdecay;
    const double gap = energy_gap(mode.lambda, mode.p, params.m);
    const auto sp = switch_profile(params, t);

    ExactCoeffs co;
    co.J = I / c * (mode.lambda * gap); // (i/c)(lambda E - p)
    co.K = 1.0 + 2.0 * I * (mode.lambda * e / c);
    co.mu = e / c;
    co.eta = eta_of(mode, params);
    co.R = sp.R;
    co.A = sp.A;
    co.log_R = params.alpha == 0.0 ? -INFINITY : log_amplitude(params) - c * t;
    return co;
}

ModeState evolve_exact(const ModeIndex& mode, const PhysParams& params, double t)
{
    if (t > 0.0)
        throw DomainError("evolve_exact: t must be <= 0 (use free_evolve for t > 0)");
    mode.validate();
    params.validate();
    if (params.alpha == 0.0)
        return asymptotic_state(mode, params, t);

    const auto co = exact_coeffs(mode, params, t);
    const double m = params.m;
    const double c = params.cdecay;
    const double gap = energy_gap(mode.lambda, mode.p, m);
    const double upper = m + mode.lambda * gap; // m - p + lambda E
    const double lower = m - mode.lambda * gap; // m + p - lambda E

    KummerParams<double> kp;
    kp.J = co.J;
    kp.K = co.K;
    kp.z = I * co.R;
    kp.tol = params.series_tol;
    kp.max_terms = params.series_max_terms;
    const Complex phi = kummer_phi(kp);
    const Complex dphi = kummer_phi_prime(kp);

    const Complex pref = std::exp(I * (mode.lambda * co.mu * co.log_R - 0.5 * co.R));
    const Complex drive = c * co.R * dphi;

    ModeState st;
    st.amp << pref * (upper * phi + drive), pref * (lower * phi - drive);
    st.t = t;
    st.shifted_momentum = mode.p - co.A;
    st.eta = co.eta;
    return st;
}

ModeState asymptotic_state(const ModeIndex& mode, const PhysParams& params, double t)
{
    mode.validate();
    const double m = params.m;
    const double e = dispersion(mode.p, m);
    const double gap = energy_gap(mode.lambda, mode.p, m);
    const Complex phase = amplitude_phase(mode, params) * std::exp(-I * (mode.lambda * e * t));

    ModeState st;
    st.amp << phase * (m + mode.lambda * gap), phase * (m - mode.lambda * gap);
    st.t = t;
    st.shifted_momentum = mode.p;
    st.eta = eta_of(mode, params);
    return st;
}

ModeState free_evolve(const ModeState& state0, const PhysParams& params, double t)
{
    const double dt = t - state0.t;
    if (t < 0.0 || dt < 0.0)
        throw DomainError("free_evolve: t must be >= 0 and not before the initial state");
    if (dt == 0.0)
        return state0;

    const double k = state0.shifted_momentum;
    const double ek = dispersion(k, params.m);
    const Spinor2 up = free_spinor({1, k}, params.m);
    const Spinor2 dn = free_spinor({-1, k}, params.m);
    const Complex a_up = up.dot(state0.amp); // dot() conjugates the left operand
    const Complex a_dn = dn.dot(state0.amp);

    ModeState st = state0;
    st.amp = a_up * std::exp(-I * (ek * dt)) * up + a_dn * std::exp(I * (ek * dt)) * dn;
    st.t = t;
    return st;
}

ModeState evolve(const ModeIndex& mode, const PhysParams& params, double t)
{
    if (t <= 0.0)
        return evolve_exact(mode, params, t);
    return free_evolve(evolve_exact(mode, params, 0.0), params, t);
}

double seed_time(const PhysParams& params, double threshold)
{
    if (!(threshold > 0.0))
        throw InvalidParams("seed threshold must be positive");
    if (params.alpha == 0.0)
        return -10.0;
    const double c = params.cdecay;
    // R(t) = (2 alpha / c) e^{-ct} = threshold
    const double t = -std::log(c * threshold / (2.0 * params.alpha)) / c;
    return std::min(t, 0.0);
}

} // namespace diracsea
