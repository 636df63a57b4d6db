#pragma once

// Small-alpha expansion of the final-state energy of one mode,
//   eps(t1) = lambda E + eps1(t1) + eps2(t1) + O(alpha^3),
// built two ways: assembled from the J/K ratio combinations of the truncated
// Phi products, and from the reduced closed forms. Both must agree.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "diracsea/modes.hpp"

namespace diracsea {

struct EnergyBreakdown {
    double eps0 = 0.0;
    double eps1 = 0.0;
    double eps2_a = 0.0;
    double eps2_b = 0.0;
    double eps2_c = 0.0;
    double eps2 = 0.0;
    double exact = 0.0;
    std::optional<double> oracle;
    double delta_pert = 0.0; // eps1 + eps2
    double residual = 0.0;   // exact - (eps0 + eps1 + eps2)
};

/// lambda * E.
double eps0(const ModeIndex& mode, const PhysParams& params);

/// 4 lambda |eta|^2 (E - lambda p) E^2, the normalisation form of eps0.
double eps0_normalized_form(const ModeIndex& mode, const PhysParams& params);

/// -lambda p alpha e^{-c t1} / E.
double eps1(const ModeIndex& mode, const PhysParams& params, double t1 = 0.0);

/// First-order term assembled from Re/Im of J/K before simplification.
double eps1_assembled(const ModeIndex& mode, const PhysParams& params, double t1 = 0.0);

/// lambda c^2 m^2 R(t1)^2 / (2E (4E^2 + c^2)).
double eps2_closed(const ModeIndex& mode, const PhysParams& params, double t1 = 0.0);

struct SecondOrder {
    double a = 0.0; // from the |Phi|^2 R^2 terms
    double b = 0.0; // from the (Phi* Phi' + c.c.) R^2 terms
    double c = 0.0; // from the |Phi'|^2 R^2 term
    double sum = 0.0;
    double closed = 0.0;
};

/// Assembles the three second-order sub-terms and checks their sum against
/// eps2_closed; throws IdentityMismatch beyond `rel_tol`.
SecondOrder eps2(const ModeIndex& mode, const PhysParams& params, double t1 = 0.0, double rel_tol = 1e-12);

struct PhiProducts {
    double phi_phi = 0.0;      // Phi* Phi
    double phi_dphi_cc = 0.0;  // Phi* Phi' + c.c.
    double dphi_dphi = 0.0;    // Phi'* Phi'
};

/// Truncated expansions: Phi*Phi to O(R^2), Phi*Phi' + c.c. to O(R), Phi'*Phi' to O(1).
PhiProducts series_products(const Complex& J, const Complex& K, double R);

/// Same products from full series evaluations of Phi(J, K, iR) and Phi'(J, K, iR).
PhiProducts full_products(const Complex& J, const Complex& K, double R, double tol = 1e-14);

struct IdentityCheck {
    std::string label;
    Complex lhs;
    Complex rhs;

    double error() const { return std::abs(lhs - rhs); }
    bool holds(double rel_tol) const { return error() <= rel_tol * std::max(1.0, std::abs(rhs)); }
};

/// Ratio identities: J/K +- c.c., J(J+1)/(K(K+1)), the denominator D(E), and the +- c.c. forms.
/// lhs from raw complex arithmetic, rhs from the reduced real expressions.
std::vector<IdentityCheck> identities_c(const ModeIndex& mode, const PhysParams& params);

/// delta eps at t1 = 0 to O(alpha^2): -lambda p alpha / E + 4 lambda m^2 alpha^2 / (2E (4E^2 + c^2)).
double delta_eps(const ModeIndex& mode, const PhysParams& params);

/// delta eps(-1, p) + delta eps(-1, -p) = -4 alpha^2 m^2 / (E (4E^2 + c^2)), p >= 0.
double pair_sum(double p, const PhysParams& params);

/// Full comparison for one mode at t1 <= 0. The oracle field is filled only on request.
EnergyBreakdown energy_breakdown(const ModeIndex& mode, const PhysParams& params, double t1 = 0.0,
                                 bool with_oracle = false, double seed_threshold = 1e-12);

} // namespace diracsea
