#include "diracsea/vacuum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"
#include "diracsea/oracle.hpp"
#include "diracsea/parallel.hpp"
#include "diracsea/perturb.hpp"
#include "diracsea/summation.hpp"

namespace diracsea {

std::string_view to_string(Route route)
{
    switch (route) {
    case Route::exact:
        return "exact";
    case Route::oracle:
        return "oracle";
    case Route::perturbative:
        return "perturbative";
    }
    return "?";
}

std::string_view to_string(GridScheme scheme)
{
    return scheme == GridScheme::uniform ? "uniform" : "sinh";
}

void MomentumGrid::validate() const
{
    if (!(p_max > 0.0) || !std::isfinite(p_max))
        throw InvalidParams("grid: p_max must be positive and finite");
    if (n_points < 2)
        throw InvalidParams("grid: n_points must be >= 2");
    if (!(stretch > 0.0))
        throw InvalidParams("grid: stretch must be positive");
    if (!(box_length > 0.0))
        throw InvalidParams("grid: box length must be positive");
}

namespace {

double upper_variable(const MomentumGrid& g)
{
    return g.scheme == GridScheme::uniform ? g.p_max : std::asinh(g.p_max / g.stretch);
}

// Composite Simpson on n equally spaced nodes; a 3/8 panel closes an odd interval count.
std::vector<double> simpson_weights(int n, double h)
{
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    const int intervals = n - 1;
    if (intervals == 1) {
        w[0] = w[1] = 0.5 * h;
        return w;
    }
    const int simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    for (int i = 0; i < simpson_end; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (simpson_end != intervals) {
        const int i = simpson_end;
        w[i] += 3.0 * h / 8.0;
        w[i + 1] += 9.0 * h / 8.0;
        w[i + 2] += 9.0 * h / 8.0;
        w[i + 3] += 3.0 * h / 8.0;
    }
    return w;
}

} // namespace

std::vector<double> MomentumGrid::points() const
{
    validate();
    const double top = upper_variable(*this);
    std::vector<double> pts(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double v = top * i / (n_points - 1);
        pts[i] = scheme == GridScheme::uniform ? v : stretch * std::sinh(v);
    }
    pts.back() = p_max;
    return pts;
}

std::vector<double> MomentumGrid::weights() const
{
    validate();
    const double top = upper_variable(*this);
    const double h = top / (n_points - 1);
    auto w = simpson_weights(n_points, h);
    if (scheme == GridScheme::sinh_stretched)
        for (int i = 0; i < n_points; ++i)
            w[i] *= stretch * std::cosh(h * i);
    return w;
}

double vacuum_integrand(double p, const PhysParams& params)
{
    const double e = dispersion(p, params.m);
    const double c = params.cdecay;
    return 4.0 * params.m * params.m / (e * (4.0 * e * e + c * c));
}

VacuumResult vacuum_density_pert(const PhysParams& params, double quad_tol)
{
    params.validate();
    const auto q = quad_semi_infinite_detailed([&](double p) { return vacuum_integrand(p, params); }, quad_tol,
                                               params.m);
    const double pref = params.alpha * params.alpha / (2.0 * std::numbers::pi);
    VacuumResult r;
    r.alpha = params.alpha;
    r.integral_I = q.value;
    r.density_pert = -pref * q.value;
    r.tail_bound = pref * q.tail_estimate;
    return r;
}

double pair_delta(double p, const PhysParams& params, Route route, double seed_threshold)
{
    if (p < 0.0)
        throw DomainError("pair_delta: p must be >= 0");
    if (params.alpha == 0.0)
        return 0.0;
    const double e = dispersion(p, params.m);
    switch (route) {
    case Route::perturbative:
        return pair_sum(p, params);
    case Route::exact:
        return (mode_energy(evolve_exact({-1, p}, params, 0.0), params) + e) +
               (mode_energy(evolve_exact({-1, -p}, params, 0.0), params) + e);
    case Route::oracle: {
        const auto run = OdeRun::seeded(params, 0.0, seed_threshold);
        return (mode_energy(evolve_ode({-1, p}, params, run), params) + e) +
               (mode_energy(evolve_ode({-1, -p}, params, run), params) + e);
    }
    }
    throw InvalidParams("pair_delta: unknown route");
}

double cutoff_tail_bound(const PhysParams& params, double p_max)
{
    const double a = params.alpha;
    const double m = params.m;
    return a * a * m * m / (2.0 * p_max * p_max) / (2.0 * std::numbers::pi);
}

DirectDensity vacuum_density_direct(const PhysParams& params, const MomentumGrid& grid, Route route,
                                    double seed_threshold)
{
    params.validate();
    grid.validate();
    DirectDensity out;
    out.p = grid.points();
    const auto w = grid.weights();
    out.pair = parallel_map(out.p.size(), [&](std::size_t i) { return pair_delta(out.p[i], params, route, seed_threshold); });

    std::vector<double> terms(out.p.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = w[i] * out.pair[i];
    out.density = pairwise_sum<double>(terms) / (2.0 * std::numbers::pi);
    out.tail_bound = cutoff_tail_bound(params, grid.p_max);

    if (out.tail_bound > 0.1 * std::abs(out.density)) {
        std::ostringstream msg;
        msg.precision(6);
        msg << "cutoff p_max=" << grid.p_max << " too small: tail bound " << out.tail_bound
            << " exceeds 10% of partial density " << out.density;
        throw CutoffTooSmall(msg.str());
    }
    return out;
}

VacuumResult vacuum_summary(const PhysParams& params, const MomentumGrid& grid)
{
    auto r = vacuum_density_pert(params);
    const auto direct = vacuum_density_direct(params, grid, Route::exact);
    r.density_exact = direct.density;
    r.tail_bound = direct.tail_bound;
    return r;
}

} // namespace diracsea
