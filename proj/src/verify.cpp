#include "diracsea/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "diracsea/errors.hpp"
#include "diracsea/exact.hpp"
#include "diracsea/oracle.hpp"
#include "diracsea/parallel.hpp"
#include "diracsea/perturb.hpp"
#include "diracsea/specfun.hpp"
#include "diracsea/vacuum.hpp"

namespace diracsea::verify {

namespace {

using C = std::complex<double>;

const double kGrid[] = {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};

PhysParams reference(const Tolerances& tol, double alpha)
{
    PhysParams pp;
    pp.m = 1.0;
    pp.cdecay = -1.0;
    pp.alpha = alpha;
    pp.series_tol = tol.series_tol;
    pp.ode_tol = tol.ode_tol;
    return pp;
}

std::string sci(double x)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

CheckResult guarded(std::string name, const std::function<CheckResult()>& body)
{
    try {
        auto r = body();
        r.name = std::move(name);
        return r;
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

// |exact - (eps0 + eps1 + eps2)| at t1 = 0.
double residual_at(int lambda, double p, const Tolerances& tol, double alpha)
{
    return std::abs(energy_breakdown({lambda, p}, reference(tol, alpha), 0.0).residual);
}

const double kScalingAlphas[] = {-0.01, -0.02, -0.04, -0.08};

} // namespace

bool GroupResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool Report::passed() const
{
    return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.passed(); });
}

CheckResult oracle_equivalence(const Tolerances& tol)
{
    return guarded("exact vs ODE energy at t=0", [&] {
        struct Job {
            double alpha;
            int lambda;
            double p;
        };
        std::vector<Job> jobs;
        for (double alpha : {-0.01, -0.1})
            for (int lam : {-1, 1})
                for (double p : kGrid)
                    jobs.push_back({alpha, lam, p});
        const auto errs = parallel_map(jobs.size(), [&](std::size_t i) {
            const auto& j = jobs[i];
            const auto pp = reference(tol, j.alpha);
            const double ode = mode_energy(evolve_ode({j.lambda, j.p}, pp, OdeRun::seeded(pp)), pp);
            const double ex = mode_energy(evolve_exact({j.lambda, j.p}, pp, 0.0), pp);
            return std::abs(ode - ex);
        });
        const double worst = *std::max_element(errs.begin(), errs.end());
        return CheckResult{{}, worst <= 1e-8, "max |dE| = " + sci(worst) + " over " + std::to_string(jobs.size()) +
                                                  " modes (limit 1e-8)"};
    });
}

CheckResult norm_conservation(const Tolerances& tol)
{
    return guarded("norm |eta|^2 (|C|^2 + |D|^2) = 1", [&] {
        double worst = 0.0;
        for (double alpha : {-0.01, -0.1, -0.5})
            for (int lam : {-1, 1})
                for (double p : kGrid)
                    worst = std::max(worst, std::abs(mode_norm(evolve_exact({lam, p}, reference(tol, alpha), 0.0)) - 1.0));
        return CheckResult{{}, worst <= 1e-9, "max deviation " + sci(worst) + " (limit 1e-9)"};
    });
}

CheckResult perturbative_closure(const Tolerances& tol)
{
    return guarded("assembled terms equal closed forms", [&] {
        double worst = 0.0;
        for (double alpha : {-0.01, -0.1})
            for (int lam : {-1, 1})
                for (double p : kGrid)
                    for (double t1 : {-1.0, 0.0}) {
                        const auto pp = reference(tol, alpha);
                        const double e1 = eps1({lam, p}, pp, t1);
                        const double e1a = eps1_assembled({lam, p}, pp, t1);
                        // eps1 vanishes at p = 0; measure against the mode's first-order scale there
                        const double scale1 = std::max(std::abs(e1), std::abs(alpha) * 1e-3);
                        worst = std::max(worst, std::abs(e1a - e1) / scale1);
                        const auto s = eps2({lam, p}, pp, t1, 1.0);
                        worst = std::max(worst, std::abs(s.sum - s.closed) / std::abs(s.closed));
                    }
        return CheckResult{{}, worst <= 1e-12, "max relative gap " + sci(worst) + " (limit 1e-12)"};
    });
}

CheckResult ratio_identities(const Tolerances& tol)
{
    return guarded("J/K ratio identities", [&] {
        double worst = 0.0;
        std::string label;
        for (double c : {-1.0, -2.0})
            for (int lam : {-1, 1})
                for (double p : kGrid) {
                    auto pp = reference(tol, -0.01);
                    pp.cdecay = c;
                    pp.alpha = 0.01 * c;
                    for (const auto& ch : identities_c({lam, p}, pp)) {
                        const double rel = ch.error() / std::max(1.0, std::abs(ch.rhs));
                        if (rel >= worst) {
                            worst = rel;
                            label = ch.label;
                        }
                    }
                }
        return CheckResult{{}, worst <= 1e-12, "max relative error " + sci(worst) + " at " + label + " (limit 1e-12)"};
    });
}

CheckResult residual_scaling(const Tolerances& tol)
{
    return guarded("residual scales as alpha^3", [&] {
        std::vector<double> r;
        for (double a : kScalingAlphas)
            r.push_back(residual_at(-1, 1.0, tol, a));
        bool ok = true;
        std::ostringstream d;
        d.precision(4);
        d << "ratios";
        for (std::size_t i = 1; i < r.size(); ++i) {
            const double ratio = r[i] / r[i - 1];
            ok = ok && ratio >= 6.5 && ratio <= 9.5;
            d << ' ' << ratio;
        }
        d << " (window [6.5, 9.5])";
        return CheckResult{{}, ok, d.str()};
    });
}

CheckResult pair_cancellation(const Tolerances& tol)
{
    return guarded("pair sums match -4 a^2 m^2/(E(4E^2+c^2)) and are negative", [&] {
        // C from the scaling run: largest r / |alpha|^3 for the reference modes
        double c_est = 0.0;
        for (double a : kScalingAlphas)
            for (double p : {-1.0, 1.0})
                c_est = std::max(c_est, residual_at(-1, p, tol, a) / std::pow(std::abs(a), 3));
        const double bound_c = 2.0 * c_est; // two modes per pair

        const auto pp = reference(tol, -0.01);
        const double a3 = std::pow(std::abs(pp.alpha), 3);
        double worst = 0.0;
        bool negative = true;
        for (double p : {0.0, 0.5, 1.0, 2.0, 3.0}) {
            const double exact = pair_delta(p, pp, Route::exact);
            worst = std::max(worst, std::abs(exact - pair_sum(p, pp)) / a3);
            negative = negative && exact < 0.0;
        }
        return CheckResult{{}, negative && worst <= bound_c,
                           "max |gap|/|alpha|^3 = " + sci(worst) + " vs C = " + sci(bound_c) +
                               (negative ? ", all negative" : ", a pair sum is not negative")};
    });
}

CheckResult vacuum_density(const Tolerances& tol)
{
    return guarded("vacuum energy density", [&] {
        const auto pp = reference(tol, -0.01);
        const double s5 = std::sqrt(5.0);
        const double closed_I = 2.0 / s5 * std::log((s5 + 1.0) / (s5 - 1.0));
        const auto s = vacuum_summary(pp, MomentumGrid{});
        const double exact = s.density_exact.value_or(0.0);
        const bool ok = std::abs(s.integral_I - closed_I) <= 1e-6 && s.density_pert < 0.0 && exact < 0.0 &&
                        std::abs(exact - s.density_pert) <= 0.01 * std::abs(s.density_pert);
        std::ostringstream d;
        d.precision(8);
        d << "I = " << s.integral_I << " (closed " << closed_I << "), density_pert = " << s.density_pert
          << ", density_exact = " << exact;
        return CheckResult{{}, ok, d.str()};
    });
}

CheckResult initial_condition_limit(const Tolerances& tol)
{
    return guarded("closed form approaches the asymptotic state linearly in R", [&] {
        const auto pp = reference(tol, -0.01);
        double first = 0.0;
        double lo = 1e300;
        double hi = 0.0;
        for (int lam : {-1, 1})
            for (double p : {-1.0, 0.5, 2.0}) {
                double prev = 0.0;
                for (double target : {1e-6, 1e-7, 1e-8, 1e-9}) {
                    const double t = seed_time(pp, target);
                    const double d =
                        (evolve_exact({lam, p}, pp, t).spinor() - asymptotic_state({lam, p}, pp, t).spinor()).norm();
                    if (prev > 0.0) {
                        lo = std::min(lo, prev / d);
                        hi = std::max(hi, prev / d);
                    } else {
                        first = std::max(first, d);
                    }
                    prev = d;
                }
            }
        const bool ok = first <= 1e-5 && lo >= 9.0 && hi <= 11.0;
        return CheckResult{{}, ok,
                           "gap at R=1e-6 " + sci(first) + ", per-decade ratio in [" + sci(lo) + ", " + sci(hi) + "]"};
    });
}

CheckResult free_evolution(const Tolerances& tol)
{
    return guarded("free evolution after switch-off", [&] {
        const auto pp = reference(tol, -0.01);
        double drift = 0.0;
        double jump = 0.0;
        for (int lam : {-1, 1})
            for (double p : {-1.0, 0.0, 1.0, 2.5}) {
                const auto s0 = evolve({lam, p}, pp, 0.0);
                const double e0 = mode_energy(s0, pp);
                for (double t : {1.0, 5.0})
                    drift = std::max(drift, std::abs(mode_energy(evolve({lam, p}, pp, t), pp) - e0));
                const auto eps = evolve({lam, p}, pp, 1e-15);
                jump = std::max(jump, (eps.spinor() - s0.spinor()).norm());
            }
        const bool ok = drift <= 1e-12 && jump <= 1e-14;
        return CheckResult{{}, ok, "energy drift " + sci(drift) + ", jump across t=0 " + sci(jump)};
    });
}

CheckResult special_functions(const Tolerances& tol)
{
    return guarded("Kummer function", [&] {
        auto params = [](C J, C K, C z, double t) {
            KummerParams<double> kp;
            kp.J = J;
            kp.K = K;
            kp.z = z;
            kp.tol = t;
            return kp;
        };
        double exp_err = 0.0;
        for (double r : {0.5, 2.0, 5.0, 10.0})
            for (int k = 0; k < 12; ++k) {
                const C z = std::polar(r, 2.0 * std::numbers::pi * k / 12.0);
                const C K{1.0, 2.0};
                const C v = kummer_phi(params(K, K, z, std::min(tol.series_tol, 1e-15)));
                exp_err = std::max(exp_err, std::abs(v - std::exp(z)) / std::abs(std::exp(z)));
            }

        std::mt19937_64 rng(20261018);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double resid = 0.0;
        for (int i = 0; i < 20; ++i) {
            const C J{3.0 * u(rng), 3.0 * u(rng)};
            const C K{2.25 + 1.75 * u(rng), 4.0 * u(rng)};
            C z = std::polar(10.0 * std::abs(u(rng)), std::numbers::pi * u(rng));
            if (z == C{})
                z = 1.0;
            resid = std::max(resid, kummer_residual(params(J, K, z, tol.series_tol)));
        }

        // reference values from a 60-digit evaluation of the same series
        struct Golden {
            C J, K, z, phi, dphi;
        };
        const Golden golden[] = {
            {{0, 1}, {1, 2}, {0, 0.5}, {0.8762094096731670853846495, 0.1848452390116557660722864},
             {0.3342495156792409364244948, 0.2922555104540640577496966}},
            {{0, 2}, {1, -4}, {0, 2}, {0.6513541616837452267937248, -0.6093982219226619900681929},
             {-0.1810072982980162140088157, 0.2023857668565843110110573}},
            {{-0.75, 1.5}, {2.5, -1}, {3, 4}, {-0.1207325683210043169135872, -0.2926593978470135806619306},
             {-0.01373122316154080640790543, 0.1161426132096661946134284}},
        };
        double gold = 0.0;
        for (const auto& g : golden) {
            const auto kp = params(g.J, g.K, g.z, 1e-16);
            gold = std::max(gold, std::abs(kummer_phi(kp) - g.phi) / std::abs(g.phi));
            gold = std::max(gold, std::abs(kummer_phi_prime(kp) - g.dphi) / std::abs(g.dphi));
        }
        const bool ok = exp_err <= 1e-12 && resid <= 1e-10 && gold <= 1e-13;
        return CheckResult{{}, ok,
                           "e^z error " + sci(exp_err) + ", residual " + sci(resid) + ", golden " + sci(gold)};
    });
}

namespace {

struct GroupDef {
    std::string name;
    std::vector<CheckResult (*)(const Tolerances&)> checks;
};

const std::vector<GroupDef>& groups()
{
    static const std::vector<GroupDef> defs = {
        {"specfun", {special_functions}},
        {"norms", {norm_conservation}},
        {"identities", {perturbative_closure, ratio_identities}},
        {"scaling", {residual_scaling, pair_cancellation}},
        {"routes", {oracle_equivalence, vacuum_density}},
        {"limits", {initial_condition_limit, free_evolution}},
    };
    return defs;
}

} // namespace

const std::vector<std::string>& group_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& g : groups())
            n.push_back(g.name);
        return n;
    }();
    return names;
}

Report run(const Tolerances& tol, std::string_view group, std::ostream* log)
{
    if (!group.empty() && std::find(group_names().begin(), group_names().end(), group) == group_names().end())
        throw InvalidParams("unknown verify group '" + std::string(group) + "'");

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    Report report;
    for (const auto& def : groups()) {
        if (!group.empty() && def.name != group)
            continue;
        const auto g0 = clock::now();
        GroupResult g;
        g.name = def.name;
        for (auto check : def.checks)
            g.checks.push_back(check(tol));
        g.seconds = std::chrono::duration<double>(clock::now() - g0).count();
        if (log) {
            *log << (g.passed() ? "PASS " : "FAIL ") << g.name << " (" << std::fixed;
            log->precision(2);
            *log << g.seconds << " s)\n" << std::defaultfloat;
            for (const auto& c : g.checks)
                *log << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
        report.groups.push_back(std::move(g));
    }
    report.seconds = std::chrono::duration<double>(clock::now() - start).count();
    return report;
}

} // namespace diracsea::verify
