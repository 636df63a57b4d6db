#pragma once

// Free-field mode structure of the 1+1D Dirac equation (hbar = c_light = 1,
// unit charge absorbed into the potential amplitude). All mode quantities are
// per unit box length; the 1/sqrt(L) normalisation never appears.

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace diracsea {

using Complex = std::complex<double>;

/// Two-component spinor (upper, lower).
using Spinor2 = Eigen::Vector2cd;

/// Physical configuration of the switched linear potential
///   V(z, t) = -z * cdecay * alpha * (1 - theta(t)) * exp(-cdecay * t).
/// cdecay is the switch-on rate, not the speed of light.
struct PhysParams {
    double m = 1.0;
    double alpha = -0.01;
    double cdecay = -1.0;
    double series_tol = 1e-13;
    int series_max_terms = 10000;
    double ode_tol = 1e-12;

    /// Throws InvalidParams unless m > 0, cdecay < 0 and alpha has the sign
    /// of cdecay (alpha == 0 is accepted as the field-free case).
    void validate() const;
};

/// A single plane-wave mode: energy sign and momentum.
struct ModeIndex {
    int lambda = -1;
    double p = 0.0;

    void validate() const;
};

/// E = sqrt(p^2 + m^2).
inline double dispersion(double p, double m) { return std::hypot(p, m); }

/// E - lambda*p, free of cancellation when lambda*p is large and positive.
double energy_gap(int lambda, double p, double m);

/// Time-evolved amplitudes of one mode. The physical spinor is
/// eta * (C, D) * exp(i * shifted_momentum * z).
struct ModeState {
    Spinor2 amp = Spinor2::Zero();
    double t = 0.0;
    double shifted_momentum = 0.0;
    Complex eta{1.0, 0.0};

    Complex C() const { return amp(0); }
    Complex D() const { return amp(1); }
    Spinor2 spinor() const { return eta * amp; }
};

/// Unit-norm eigenspinor of H0 = p sigma_x + m sigma_z with eigenvalue lambda*E.
/// lambda = -1 uses (sqrt((E-m)/2E), -sign(p) sqrt((E+m)/2E)), sign(0) = +1.
Spinor2 free_spinor(const ModeIndex& mode, double m);

/// N (1, p/(lambda E + m)), N = sqrt((lambda E + m)/(2 lambda E)), evaluated as
/// written. Loses digits to the E - m cancellation for lambda = -1 and is 0/0
/// at p = 0; exists as a reference to check free_spinor against in higher precision.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> free_spinor_literal(int lambda, const Scalar& p, const Scalar& m)
{
    using std::sqrt;
    const Scalar le = Scalar(lambda) * sqrt(p * p + m * m);
    const Scalar n = sqrt((le + m) / (Scalar(2) * le));
    Eigen::Matrix<Scalar, 2, 1> u;
    u << n, n * p / (le + m);
    return u;
}

/// Expectation of H0 at the state's momentum:
///   |eta|^2 [ (p - A) 2 Re(C* D) + m (|C|^2 - |D|^2) ].
/// This is the total energy only while the potential is off (t -> -inf or t >= 0).
double mode_energy(const ModeState& state, const PhysParams& params);

/// |eta|^2 (|C|^2 + |D|^2); unity for any correctly evolved state.
double mode_norm(const ModeState& state);

} // namespace diracsea
