#include "diracsea/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "diracsea/dopri5.hpp"
#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"

namespace diracsea {

OdeRun OdeRun::seeded(const PhysParams& params, double t_end, double seed_threshold)
{
    OdeRun run;
    run.t_start = std::min(seed_time(params, seed_threshold), t_end - 1.0);
    run.t_end = t_end;
    run.tol = params.ode_tol;
    return run;
}

void OdeRun::validate() const
{
    if (!(t_start < t_end) || t_end > 0.0)
        throw InvalidParams("ode run: need t_start < t_end <= 0");
    if (!(tol > 0.0))
        throw InvalidParams("ode run: tol must be positive");
    if (max_steps < 1)
        throw InvalidParams("ode run: max_steps must be positive");
}

ModeState evolve_ode(const ModeIndex& mode, const PhysParams& params, const OdeRun& run, OdeReport* report)
{
    run.validate();
    params.validate();
    if (switch_profile(params, run.t_start).R > kSeedRegimeLimit)
        throw SeedRegimeViolation("ode run: R(t_start) = " +
                                  std::to_string(switch_profile(params, run.t_start).R) +
                                  " exceeds the seed limit");

    const ModeState seed = asymptotic_state(mode, params, run.t_start);
    const double p = mode.p;
    const double m = params.m;
    const double alpha = params.alpha;
    const double c = params.cdecay;
    const Complex minus_i{0.0, -1.0};

    auto rhs = [=](double t, const Spinor2& y) -> Spinor2 {
        const double k = p - alpha * std::exp(-c * t);
        Spinor2 dy;
        dy << minus_i * (k * y(1) + m * y(0)), minus_i * (k * y(0) - m * y(1));
        return dy;
    };

    Dopri5Options opt;
    opt.rtol = run.tol;
    opt.atol = run.tol * seed.amp.norm();
    opt.max_steps = run.max_steps;
    Dopri5Stats stats;
    const Spinor2 y_end = dopri5_integrate(rhs, seed.amp, run.t_start, run.t_end, opt, &stats);

    ModeState st;
    st.amp = y_end;
    st.t = run.t_end;
    st.shifted_momentum = p - switch_profile(params, run.t_end).A;
    st.eta = seed.eta;
    if (report) {
        report->steps = stats.accepted;
        report->rejected = stats.rejected;
        report->norm_drift = std::abs(mode_norm(st) - mode_norm(seed));
    }
    return st;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// 7-point Gauss weights on the odd Kronrod nodes (indices 1, 3, 5, 7)
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15 {
    double kronrod;
    double error;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b, int& evals)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kron += kWgk[j] * fsum;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * fsum;
    }
    evals += 15;
    return {kron * half, std::abs((kron - gauss) * half)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double abs_tol, int depth,
             int& evals)
{
    const auto whole = gk15(f, a, b, evals);
    if (whole.error <= abs_tol || depth >= 40 || !std::isfinite(whole.kronrod))
        return whole.kronrod;
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * abs_tol, depth + 1, evals) +
           adapt(f, mid, b, 0.5 * abs_tol, depth + 1, evals);
}

} // namespace

double quad_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int* evaluations)
{
    int evals = 0;
    const double v = adapt(f, a, b, abs_tol, 0, evals);
    if (evaluations)
        *evaluations += evals;
    return v;
}

QuadResult quad_semi_infinite_detailed(const std::function<double(double)>& integrand, double tol,
                                       double scale)
{
    if (!(tol > 0.0))
        throw InvalidParams("quad_semi_infinite: tol must be positive");
    if (!(scale > 0.0))
        throw InvalidParams("quad_semi_infinite: scale must be positive");

    auto transformed = [&](double u) {
        const double p = scale * std::sinh(u);
        const double jac = scale * std::cosh(u);
        const double v = integrand(p);
        return v == 0.0 ? 0.0 : v * jac;
    };

    constexpr double kMaxU = 700.0;
    QuadResult res;
    double total = 0.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double prev_ratio = 1.0;
    int evals = 0;
    for (double u = 0.0; u < kMaxU; u += 1.0) {
        const auto coarse = gk15(transformed, u, u + 1.0, evals);
        const double floor = std::max(std::abs(coarse.kronrod), 1e-3 * std::abs(total));
        const double panel = adapt(transformed, u, u + 1.0, 0.25 * tol * floor, 0, evals);
        total += panel;
        res.upper_u = u + 1.0;

        if (std::isnan(prev)) {
            prev = panel;
            continue;
        }
        double tail = std::numeric_limits<double>::infinity();
        if (panel == 0.0 && prev == 0.0) {
            tail = 0.0;
        } else if (prev != 0.0) {
            const double ratio = std::abs(panel / prev);
            const double q = std::max(ratio, prev_ratio);
            if (q < 1.0)
                tail = std::abs(panel) * q / (1.0 - q);
            prev_ratio = ratio;
        }
        prev = panel;
        if (tail <= tol * std::abs(total)) {
            res.value = total;
            res.tail_estimate = tail;
            res.evaluations = evals;
            return res;
        }
    }
    throw NonConvergence("quad_semi_infinite: tail did not fall below tolerance by u = 700");
}

double quad_semi_infinite(const std::function<double(double)>& integrand, double tol, double scale)
{
    return quad_semi_infinite_detailed(integrand, tol, scale).value;
}

} // namespace diracsea
