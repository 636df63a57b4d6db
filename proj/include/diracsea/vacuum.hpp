#pragma once

// Vacuum (Dirac sea, lambda = -1) energy change per unit length,
//   Delta Xi / L = (1/2pi) int_0^inf [delta eps(-1, p) + delta eps(-1, -p)] dp,
// by the closed O(alpha^2) integral and by direct summation of per-mode shifts.

#include <optional>
#include <string_view>
#include <vector>

#include "diracsea/modes.hpp"

namespace diracsea {

enum class GridScheme { uniform, sinh_stretched };
enum class Route { exact, oracle, perturbative };

std::string_view to_string(Route route);
std::string_view to_string(GridScheme scheme);

struct MomentumGrid {
    double p_max = 50.0;
    int n_points = 401;
    GridScheme scheme = GridScheme::sinh_stretched;
    double stretch = 1.0;     // sinh scale s in p = s sinh(u)
    double box_length = 1.0;  // only densities are reported; kept for the continuum measure

    void validate() const;

    /// Strictly increasing nodes in [0, p_max].
    std::vector<double> points() const;

    /// Composite Simpson weights in the grid's own variable, mapped back to dp.
    std::vector<double> weights() const;
};

struct VacuumResult {
    double alpha = 0.0;
    double density_pert = 0.0;
    std::optional<double> density_exact;
    double integral_I = 0.0;
    double tail_bound = 0.0;
};

struct DirectDensity {
    double density = 0.0;    // (1/2pi) * quadrature over [0, p_max]
    double tail_bound = 0.0; // bound on the (p_max, inf) remainder, same units
    std::vector<double> p;
    std::vector<double> pair; // delta eps(-1, p) + delta eps(-1, -p) at each node
};

/// 4 m^2 / (E (4E^2 + c^2)).
double vacuum_integrand(double p, const PhysParams& params);

/// -(alpha^2 / 2pi) * int_0^inf vacuum_integrand dp.
VacuumResult vacuum_density_pert(const PhysParams& params, double quad_tol = 1e-11);

/// delta eps(-1, p) + delta eps(-1, -p) by the chosen route.
double pair_delta(double p, const PhysParams& params, Route route, double seed_threshold = 1e-12);

/// Bound on (1/2pi) int_{p_max}^inf |pair sum| dp from |pair| <= alpha^2 m^2 / p^3.
double cutoff_tail_bound(const PhysParams& params, double p_max);

/// Grid quadrature of the pair sum. Throws CutoffTooSmall when the tail bound
/// exceeds 10% of the partial result.
DirectDensity vacuum_density_direct(const PhysParams& params, const MomentumGrid& grid, Route route,
                                    double seed_threshold = 1e-12);

/// Closed integral plus the direct exact-route density on `grid`.
VacuumResult vacuum_summary(const PhysParams& params, const MomentumGrid& grid);

} // namespace diracsea
