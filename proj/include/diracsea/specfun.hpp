#pragma once

// Kummer's confluent hypergeometric function 1F1(J; K; z) for complex
// parameters and argument, by direct power series.
//
// Valid domain: |z| <= 30. For Re z < 0 the series is evaluated through
// Kummer's transformation 1F1(J;K;z) = e^z 1F1(K-J;K;-z) so that the terms
// never alternate into catastrophic cancellation on the negative real axis.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "diracsea/errors.hpp"
#include "diracsea/summation.hpp"

namespace diracsea {

template <typename Scalar>
struct KummerParams {
    std::complex<Scalar> J{};
    std::complex<Scalar> K{1};
    std::complex<Scalar> z{};
    Scalar tol = Scalar(1e-13);
    int max_terms = 10000;
};

namespace detail {

template <typename Scalar>
bool is_nonpositive_integer(const std::complex<Scalar>& k)
{
    return k.imag() == Scalar(0) && k.real() <= Scalar(0) && std::floor(k.real()) == k.real();
}

template <typename Scalar>
void validate(const KummerParams<Scalar>& kp)
{
    if (!(kp.tol > Scalar(0)))
        throw InvalidParams("kummer: tol must be positive");
    if (kp.max_terms < 2)
        throw InvalidParams("kummer: max_terms must be >= 2");
    if (is_nonpositive_integer(kp.K))
        throw InvalidParams("kummer: K is a nonpositive integer");
}

// Series sum with term_{n+1} = term_n (J+n)/(K+n) z/(n+1).
// Convergence is only declared once the term ratio has dropped below one,
// otherwise a small early term on the rising side could stop the sum.
template <typename Scalar>
std::complex<Scalar> kummer_series(const std::complex<Scalar>& J, const std::complex<Scalar>& K,
                                   const std::complex<Scalar>& z, Scalar tol, int max_terms)
{
    using C = std::complex<Scalar>;
    CompensatedSum<C> sum;
    sum.add(C{1});
    C term{1};
    if (z == C{0})
        return sum.value();
    for (int n = 0; n + 1 < max_terms; ++n) {
        const Scalar sn = Scalar(n);
        term *= (J + sn) / (K + sn) * z / (sn + Scalar(1));
        sum.add(term);
        if (term == C{0})
            return sum.value();
        const Scalar next = std::abs((J + sn + Scalar(1)) / (K + sn + Scalar(1)) * z / (sn + Scalar(2)));
        if (next < Scalar(1) && std::abs(term) <= tol * std::abs(sum.value()))
            return sum.value();
    }
    throw NonConvergence("kummer: series did not converge within " + std::to_string(max_terms) +
                         " terms");
}

} // namespace detail

/// 1F1(J; K; z), truncated once the last term is below tol * |partial sum|.
template <typename Scalar>
std::complex<Scalar> kummer_phi(const KummerParams<Scalar>& kp)
{
    detail::validate(kp);
    if (kp.z.real() < Scalar(0))
        return std::exp(kp.z) * detail::kummer_series(kp.K - kp.J, kp.K, -kp.z, kp.tol, kp.max_terms);
    return detail::kummer_series(kp.J, kp.K, kp.z, kp.tol, kp.max_terms);
}

template <typename Scalar>
KummerParams<Scalar> shifted(const KummerParams<Scalar>& kp, int by)
{
    KummerParams<Scalar> out = kp;
    out.J += Scalar(by);
    out.K += Scalar(by);
    return out;
}

/// d/dz 1F1(J; K; z) = (J/K) 1F1(J+1; K+1; z).
template <typename Scalar>
std::complex<Scalar> kummer_phi_prime(const KummerParams<Scalar>& kp)
{
    detail::validate(kp);
    if (kp.J == std::complex<Scalar>{0})
        return {};
    return kp.J / kp.K * kummer_phi(shifted(kp, 1));
}

template <typename Scalar>
std::complex<Scalar> kummer_phi_second(const KummerParams<Scalar>& kp)
{
    detail::validate(kp);
    const auto one = Scalar(1);
    const auto coeff = kp.J * (kp.J + one) / (kp.K * (kp.K + one));
    if (coeff == std::complex<Scalar>{0})
        return {};
    return coeff * kummer_phi(shifted(kp, 2));
}

/// Scaled residual of Kummer's equation z w'' + (K - z) w' - J w = 0.
template <typename Scalar>
Scalar kummer_residual(const KummerParams<Scalar>& kp)
{
    if (kp.z == std::complex<Scalar>{0})
        throw DomainError("kummer_residual: z must be nonzero");
    const auto w = kummer_phi(kp);
    const auto dw = kummer_phi_prime(kp);
    const auto d2w = kummer_phi_second(kp);
    const auto r = kp.z * d2w + (kp.K - kp.z) * dw - kp.J * w;
    return std::abs(r) / std::max(Scalar(1), std::abs(w));
}

} // namespace diracsea
