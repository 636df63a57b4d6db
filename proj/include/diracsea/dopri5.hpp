#pragma once

// Dormand-Prince 5(4) embedded Runge-Kutta integrator with FSAL and a PI step
// controller. Works on any fixed- or dynamic-size Eigen column vector, real or
// complex; the error norm is the RMS of |err_i| / (atol + rtol max(|y_i|, |y_new_i|)).

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Core>

#include "diracsea/errors.hpp"

namespace diracsea {

struct Dopri5Options {
    double rtol = 1e-10;
    double atol = 1e-10;
    long max_steps = 1'000'000;
    double initial_step = 0.0; // 0 selects a step from the local derivative scale
};

struct Dopri5Stats {
    long accepted = 0;
    long rejected = 0;
    long evaluations = 0;
};

template <typename Vector, typename Rhs>
Vector dopri5_integrate(Rhs&& rhs, Vector y, double t0, double t1, const Dopri5Options& opt,
                        Dopri5Stats* stats = nullptr)
{
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    // b - b*, the difference between the 5th- and embedded 4th-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Dopri5Stats local;
    Dopri5Stats& st = stats ? *stats : local;
    st = {};
    if (t1 == t0)
        return y;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);

    auto error_norm = [&](const Vector& err, const Vector& ya, const Vector& yb) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < err.size(); ++i) {
            const double scale = opt.atol + opt.rtol * std::max(std::abs(ya(i)), std::abs(yb(i)));
            const double r = std::abs(err(i)) / scale;
            acc += r * r;
        }
        return std::sqrt(acc / static_cast<double>(err.size()));
    };

    Vector k1 = rhs(t0, y);
    ++st.evaluations;

    double h = opt.initial_step;
    if (h <= 0.0) {
        const double dnorm = k1.norm();
        const double ynorm = std::max(y.norm(), opt.atol);
        h = dnorm > 0.0 ? 0.01 * ynorm / dnorm : 1e-3 * span;
        h *= std::pow(opt.rtol, 0.2) * 10.0;
        h = std::clamp(h, 1e-12 * span, span);
    }

    double t = t0;
    double err_prev = 1e-4;
    constexpr double safety = 0.9, min_factor = 0.2, max_factor = 10.0;
    constexpr double beta = 0.04, alpha_exp = 0.2 - 0.75 * beta;

    while (dir * (t1 - t) > 0.0) {
        if (st.accepted + st.rejected >= opt.max_steps)
            throw StepLimitExceeded("dopri5: step limit of " + std::to_string(opt.max_steps) +
                                    " reached at t = " + std::to_string(t));
        bool last = false;
        if (h >= std::abs(t1 - t)) {
            h = std::abs(t1 - t);
            last = true;
        }
        const double hs = dir * h;

        const Vector k2 = rhs(t + c2 * hs, (y + hs * (a21 * k1)).eval());
        const Vector k3 = rhs(t + c3 * hs, (y + hs * (a31 * k1 + a32 * k2)).eval());
        const Vector k4 = rhs(t + c4 * hs, (y + hs * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
        const Vector k5 = rhs(t + c5 * hs, (y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
        const Vector k6 =
            rhs(t + hs, (y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)).eval());
        const Vector y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vector k7 = rhs(t + hs, y_new);
        st.evaluations += 6;

        const Vector err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double en = error_norm(err, y, y_new);

        if (en <= 1.0) {
            ++st.accepted;
            t = last ? t1 : t + hs;
            y = y_new;
            k1 = k7;
            double factor = en == 0.0 ? max_factor
                                      : safety * std::pow(en, -alpha_exp) * std::pow(err_prev, beta);
            factor = std::clamp(factor, min_factor, max_factor);
            err_prev = std::max(en, 1e-4);
            h *= factor;
        } else {
            ++st.rejected;
            h *= std::max(min_factor, safety * std::pow(en, -0.2));
        }
        if (h < 1e-14 * span)
            throw StepLimitExceeded("dopri5: step size underflow at t = " + std::to_string(t));
    }
    return y;
}

} // namespace diracsea
