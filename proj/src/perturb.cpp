#include "diracsea/perturb.hpp"

#include <cmath>
#include <sstream>

#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"
#include "diracsea/oracle.hpp"
#include "diracsea/specfun.hpp"

namespace diracsea {

namespace {

constexpr Complex I{0.0, 1.0};

struct Kinematics {
    double e;
    double gap;   // E - lambda p
    double eta2;  // |eta|^2 = 1 / (4 E (E - lambda p))
    double R;     // R(t1)
    Complex K;
    Complex jk;   // J / K
    Complex jjkk; // J (J + 1) / (K (K + 1))
};

Kinematics kinematics(const ModeIndex& mode, const PhysParams& params, double t1)
{
    mode.validate();
    if (t1 > 0.0)
        throw DomainError("perturbative terms are defined for t1 <= 0");
    const auto co = exact_coeffs(mode, params, t1);
    Kinematics k;
    k.e = dispersion(mode.p, params.m);
    k.gap = energy_gap(mode.lambda, mode.p, params.m);
    k.eta2 = 1.0 / (4.0 * k.e * k.gap);
    k.R = co.R;
    k.K = co.K;
    k.jk = co.J / co.K;
    k.jjkk = co.J * (co.J + 1.0) / (co.K * (co.K + 1.0));
    return k;
}

} // namespace

double eps0(const ModeIndex& mode, const PhysParams& params)
{
    mode.validate();
    return mode.lambda * dispersion(mode.p, params.m);
}

double eps0_normalized_form(const ModeIndex& mode, const PhysParams& params)
{
    const auto k = kinematics(mode, params, 0.0);
    return 4.0 * mode.lambda * k.eta2 * k.gap * k.e * k.e;
}

double eps1(const ModeIndex& mode, const PhysParams& params, double t1)
{
    mode.validate();
    const double e = dispersion(mode.p, params.m);
    return -mode.lambda * mode.p * params.alpha * std::exp(-params.cdecay * t1) / e;
}

double eps1_assembled(const ModeIndex& mode, const PhysParams& params, double t1)
{
    const auto k = kinematics(mode, params, t1);
    const double c = params.cdecay;
    const double p = mode.p;
    // i (J/K - c.c.) = -2 Im(J/K);  J/K + c.c. = 2 Re(J/K)
    const double im_part = -2.0 * k.jk.imag();
    const double re_part = 2.0 * k.jk.real();
    return k.eta2 * k.R *
           (4.0 * mode.lambda * k.gap * (k.e * k.e * im_part - 0.5 * c * p) + 2.0 * c * k.e * k.gap * re_part);
}

double eps2_closed(const ModeIndex& mode, const PhysParams& params, double t1)
{
    mode.validate();
    const double e = dispersion(mode.p, params.m);
    const double c = params.cdecay;
    const double m = params.m;
    const double r = switch_profile(params, t1).R;
    return mode.lambda * c * c * m * m * r * r / (2.0 * e * (4.0 * e * e + c * c));
}

SecondOrder eps2(const ModeIndex& mode, const PhysParams& params, double t1, double rel_tol)
{
    const auto k = kinematics(mode, params, t1);
    const double c = params.cdecay;
    const double p = mode.p;
    const double lam = mode.lambda;
    const double r2 = k.R * k.R;
    const double jk2 = std::norm(k.jk);

    SecondOrder out;
    // E^2 (|J/K|^2 - (1/2)(JJ/KK + c.c.)) - i (c p / 2)(J/K - c.c.)
    out.a = 4.0 * lam * k.eta2 * r2 * k.gap * (k.e * k.e * (jk2 - k.jjkk.real()) + c * p * k.jk.imag());
    // i E (JJ/KK - c.c.) + (c lambda / 2)(J/K + c.c.)
    out.b = 2.0 * c * k.eta2 * r2 * k.gap * (-2.0 * k.e * k.jjkk.imag() + c * lam * k.jk.real());
    out.c = -2.0 * c * c * p * k.eta2 * r2 * jk2;
    out.sum = out.a + out.b + out.c;
    out.closed = eps2_closed(mode, params, t1);

    const double scale = std::max(std::abs(out.closed), 1e-300);
    if (std::abs(out.sum - out.closed) > rel_tol * scale) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "eps2: assembled " << out.sum << " != closed " << out.closed << " (lambda=" << mode.lambda
            << ", p=" << mode.p << ")";
        throw IdentityMismatch(msg.str());
    }
    return out;
}

PhiProducts series_products(const Complex& J, const Complex& K, double R)
{
    const Complex jk = J / K;
    const Complex jjkk = J * (J + 1.0) / (K * (K + 1.0));
    PhiProducts out;
    out.phi_phi = 1.0 - 2.0 * jk.imag() * R - jjkk.real() * R * R + std::norm(jk) * R * R;
    out.phi_dphi_cc = 2.0 * jk.real() - 2.0 * jjkk.imag() * R;
    out.dphi_dphi = std::norm(jk);
    return out;
}

PhiProducts full_products(const Complex& J, const Complex& K, double R, double tol)
{
    KummerParams<double> kp;
    kp.J = J;
    kp.K = K;
    kp.z = I * R;
    kp.tol = tol;
    const Complex phi = kummer_phi(kp);
    const Complex dphi = kummer_phi_prime(kp);
    PhiProducts out;
    out.phi_phi = std::norm(phi);
    out.phi_dphi_cc = 2.0 * (std::conj(phi) * dphi).real();
    out.dphi_dphi = std::norm(dphi);
    return out;
}

std::vector<IdentityCheck> identities_c(const ModeIndex& mode, const PhysParams& params)
{
    const auto k = kinematics(mode, params, 0.0);
    const double c = params.cdecay;
    const double e = k.e;
    const double lam = mode.lambda;
    const double p = mode.p;
    const double le_p = lam * k.gap; // lambda E - p
    const double denom = c * c + 4.0 * e * e;
    const double d = (1.0 + 4.0 * e * e / (c * c)) * (1.0 + e * e / (c * c));

    std::vector<IdentityCheck> out;
    out.push_back({"J/K + c.c.", k.jk + std::conj(k.jk), Complex{4.0 * e * k.gap / denom, 0.0}});
    out.push_back({"J/K - c.c.", k.jk - std::conj(k.jk), Complex{0.0, 2.0 * lam * c * k.gap / denom}});
    out.push_back({"J(J+1)/K(K+1)", k.jjkk,
                   le_p / (2.0 * c * d) * (1.0 + I * le_p / c) *
                       (I * (1.0 - 2.0 * e * e / (c * c)) + 3.0 * lam * e / c)});
    out.push_back({"|K(K+1)|^2 = 4D", Complex{std::norm(k.K * (k.K + 1.0)), 0.0}, Complex{4.0 * d, 0.0}});
    out.push_back({"J(J+1)/K(K+1) + c.c.", k.jjkk + std::conj(k.jjkk),
                   Complex{le_p / (c * d) * ((2.0 * lam * e + p) / c + 2.0 * e * e * le_p / (c * c * c)), 0.0}});
    out.push_back({"J(J+1)/K(K+1) - c.c.", k.jjkk - std::conj(k.jjkk),
                   Complex{0.0, le_p / (c * d) * ((1.0 - 2.0 * e * e / (c * c)) + 3.0 * lam * e * le_p / (c * c))}});
    return out;
}

double delta_eps(const ModeIndex& mode, const PhysParams& params)
{
    return eps1(mode, params, 0.0) + eps2_closed(mode, params, 0.0);
}

double pair_sum(double p, const PhysParams& params)
{
    if (p < 0.0)
        throw DomainError("pair_sum: p must be >= 0");
    const double e = dispersion(p, params.m);
    const double c = params.cdecay;
    const double a = params.alpha;
    const double m = params.m;
    return -4.0 * a * a * m * m / (e * (4.0 * e * e + c * c));
}

EnergyBreakdown energy_breakdown(const ModeIndex& mode, const PhysParams& params, double t1, bool with_oracle,
                                 double seed_threshold)
{
    EnergyBreakdown b;
    b.eps0 = eps0(mode, params);
    b.eps1 = eps1(mode, params, t1);
    const auto second = eps2(mode, params, t1);
    b.eps2_a = second.a;
    b.eps2_b = second.b;
    b.eps2_c = second.c;
    b.eps2 = second.sum;
    // no field: the mode stays in its free eigenstate, so skip the rounding of the closed form
    b.exact = params.alpha == 0.0 ? b.eps0 : mode_energy(evolve_exact(mode, params, t1), params);
    if (with_oracle)
        b.oracle = mode_energy(evolve_ode(mode, params, OdeRun::seeded(params, t1, seed_threshold)), params);
    b.delta_pert = b.eps1 + b.eps2;
    b.residual = b.exact - (b.eps0 + b.eps1 + b.eps2);
    return b;
}

} // namespace diracsea
