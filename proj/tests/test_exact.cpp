#include <cmath>
#include <vector>

#include "doctest.h"

#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"

using namespace diracsea;

namespace {

PhysParams with_alpha(double alpha)
{
    PhysParams pp;
    pp.alpha = alpha;
    return pp;
}

// i d/dt (C, D) - [ (p - A)(D, C) + m (C, -D) ] by central differences of the closed form.
double ode_defect(const ModeIndex& mode, const PhysParams& pp, double t, double h)
{
    const auto lo = evolve_exact(mode, pp, t - h);
    const auto mid = evolve_exact(mode, pp, t);
    const auto hi = evolve_exact(mode, pp, t + h);
    const Spinor2 dt = (hi.amp - lo.amp) / (2.0 * h);
    const double k = mid.shifted_momentum;
    Spinor2 rhs;
    rhs << k * mid.D() + pp.m * mid.C(), k * mid.C() - pp.m * mid.D();
    return (Complex{0.0, 1.0} * dt - rhs).norm();
}

} // namespace

TEST_CASE("switch profile")
{
    const auto pp = with_alpha(-0.01);
    auto sp = switch_profile(pp, -40.0);
    CHECK(sp.R == doctest::Approx(0.02 * std::exp(-40.0)).epsilon(1e-14));
    CHECK(sp.A == doctest::Approx(-0.01 * std::exp(-40.0)).epsilon(1e-14));
    CHECK(sp.R < 1e-19);

    sp = switch_profile(pp, 0.0);
    CHECK(sp.R == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(sp.A == doctest::Approx(-0.01).epsilon(1e-15));

    sp = switch_profile(with_alpha(0.0), -3.0);
    CHECK(sp.R == 0.0);
    CHECK(sp.A == 0.0);
}

TEST_CASE("potential and field")
{
    const auto pp = with_alpha(-0.01);
    for (double z : {-3.0, 0.0, 2.0})
        CHECK(potential(pp, z, 0.0) == 0.0);
    CHECK(field(pp, 0.0) == 0.0);
    // -z c alpha e^{-ct} with c = -1, t = -1 gives e^{-1}
    CHECK(potential(pp, 1.0, -1.0) == doctest::Approx(-0.01 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(potential(with_alpha(0.0), 1.0, -1.0) == 0.0);

    const double h = 1e-3;
    const double dvdz = (potential(pp, 1.0 + h, -1.0) - potential(pp, 1.0 - h, -1.0)) / (2 * h);
    CHECK(field(pp, -1.0) == doctest::Approx(-dvdz).epsilon(1e-12));
}

TEST_CASE("evolve_exact is defined only up to t = 0")
{
    CHECK_THROWS_AS(evolve_exact({-1, 1.0}, PhysParams{}, 0.1), DomainError);
    CHECK_NOTHROW(evolve_exact({-1, 1.0}, PhysParams{}, 0.0));
}

TEST_CASE("weak-field limit reduces to the free state")
{
    const auto pp = with_alpha(-1e-10);
    for (int lam : {-1, 1})
        for (double p : {-2.0, 0.0, 1.0}) {
            const auto st = evolve_exact({lam, p}, pp, 0.0);
            const double e = dispersion(p, pp.m);
            CHECK(mode_energy(st, pp) == doctest::Approx(lam * e).epsilon(1e-9));
            const Spinor2 u = free_spinor({lam, p}, pp.m);
            CHECK(std::abs(u.dot(st.spinor())) == doctest::Approx(1.0).epsilon(1e-9));
        }
}

TEST_CASE("reference mode energy at t = 0")
{
    // -E + p alpha / E - 2 m^2 alpha^2 / (E (4E^2 + c^2)) for (lambda=-1, p=1, alpha=-0.01)
    const auto st = evolve_exact({-1, 1.0}, with_alpha(-0.01), 0.0);
    CHECK(mode_energy(st, with_alpha(-0.01)) == doctest::Approx(-1.4213004).epsilon(1e-7 / 1.42));
}

TEST_CASE("property: norm is conserved across the mode grid")
{
    for (double alpha : {-0.01, -0.1, -0.5})
        for (int lam : {-1, 1})
            for (double p : {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0})
                for (double t : {-5.0, -1.0, -0.3, 0.0}) {
                    const auto st = evolve_exact({lam, p}, with_alpha(alpha), t);
                    INFO("alpha=" << alpha << " lambda=" << lam << " p=" << p << " t=" << t);
                    CHECK(std::abs(mode_norm(st) - 1.0) <= 1e-9);
                }
    const auto st = evolve_exact({-1, 2.0}, with_alpha(-0.05), 0.0);
    CHECK(std::abs(mode_norm(st) - 1.0) <= 1e-10);
}

TEST_CASE("property: closed form satisfies the amplitude equation at second order in h")
{
    const auto pp = with_alpha(-0.3);
    for (int lam : {-1, 1})
        for (double p : {-1.5, 0.0, 2.0})
            for (double t : {-2.0, -0.6}) {
                const double r1 = ode_defect({lam, p}, pp, t, 2e-2);
                const double r2 = ode_defect({lam, p}, pp, t, 1e-2);
                INFO("lambda=" << lam << " p=" << p << " t=" << t << " r1=" << r1 << " r2=" << r2);
                CHECK(r2 < 1e-2);
                CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
            }
}

TEST_CASE("property: closed form approaches the asymptotic state linearly in R")
{
    const auto pp = with_alpha(-0.01);
    for (int lam : {-1, 1})
        for (double p : {-1.0, 0.5, 2.0}) {
            std::vector<double> diffs;
            for (double target : {1e-6, 1e-7, 1e-8, 1e-9}) {
                const double t = seed_time(pp, target);
                CHECK(switch_profile(pp, t).R == doctest::Approx(target).epsilon(1e-10));
                const auto ex = evolve_exact({lam, p}, pp, t);
                const auto as = asymptotic_state({lam, p}, pp, t);
                diffs.push_back((ex.spinor() - as.spinor()).norm());
            }
            CHECK(diffs[0] <= 1e-5);
            for (std::size_t i = 1; i < diffs.size(); ++i)
                CHECK(diffs[i - 1] / diffs[i] == doctest::Approx(10.0).epsilon(0.02));
        }
}

TEST_CASE("spatial phase tracks p - alpha e^{-ct}")
{
    const auto pp = with_alpha(-0.2);
    for (double t : {-3.0, -1.0, 0.0}) {
        const auto st = evolve_exact({1, 0.7}, pp, t);
        CHECK(st.shifted_momentum == 0.7 - (-0.2) * std::exp(-pp.cdecay * t));
    }
}

TEST_CASE("free evolution after the field is switched off")
{
    const auto pp = with_alpha(-0.01);
    const auto s0 = evolve_exact({-1, 1.0}, pp, 0.0);

    const auto same = free_evolve(s0, pp, 0.0);
    CHECK(same.amp == s0.amp);

    const double e0 = mode_energy(s0, pp);
    for (double t : {1e-9, 1.0, 5.0, 40.0}) {
        const auto st = free_evolve(s0, pp, t);
        CHECK(std::abs(mode_energy(st, pp) - e0) <= 1e-12);
        CHECK(std::abs(mode_norm(st) - 1.0) <= 1e-10);
        CHECK(st.shifted_momentum == s0.shifted_momentum);
    }
    CHECK((free_evolve(s0, pp, 1e-12).amp - s0.amp).norm() <= 1e-11);
    CHECK_THROWS_AS(free_evolve(s0, pp, -1.0), DomainError);

    // piecewise evolve() stitches the two regimes
    CHECK(evolve({-1, 1.0}, pp, 0.0).amp == s0.amp);
    CHECK(std::abs(mode_energy(evolve({-1, 1.0}, pp, 3.0), pp) - e0) <= 1e-12);
}

TEST_CASE("field-free free evolution is a pure phase")
{
    const auto pp = with_alpha(0.0);
    const double t = 2.5;
    for (int lam : {-1, 1}) {
        const auto s0 = evolve_exact({lam, 1.3}, pp, 0.0);
        const auto st = free_evolve(s0, pp, t);
        const Complex phase = std::exp(Complex{0.0, -lam * dispersion(1.3, pp.m) * t});
        CHECK((st.amp - phase * s0.amp).norm() <= 1e-13 * s0.amp.norm());
    }
}

TEST_CASE("eta and the asymptotic phase cancel")
{
    const auto pp = with_alpha(-0.01);
    for (int lam : {-1, 1})
        for (double p : {-1.0, 0.0, 2.0}) {
            const double t = -12.0;
            const auto as = asymptotic_state({lam, p}, pp, t);
            const double e = dispersion(p, pp.m);
            const double gap = energy_gap(lam, p, pp.m);
            // free solution e^{-i lambda E t} (m - p + lambda E, m + p - lambda E) / sqrt(4E(E - lambda p))
            Spinor2 expected;
            expected << pp.m - p + lam * e, pp.m + p - lam * e;
            expected *= std::exp(Complex{0.0, -lam * e * t}) / std::sqrt(4.0 * e * gap);
            CHECK((as.spinor() - expected).norm() <= 1e-14);
        }
}

TEST_CASE("seed time")
{
    const auto pp = with_alpha(-0.01);
    const double t = seed_time(pp, 1e-12);
    CHECK(t == doctest::Approx(std::log(1e-12 / 0.02)).epsilon(1e-14));
    CHECK(switch_profile(pp, t).R == doctest::Approx(1e-12).epsilon(1e-12));
    CHECK_THROWS_AS(seed_time(pp, 0.0), InvalidParams);
}
