#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace diracsea {

/// Neumaier-compensated accumulator. Result depends only on the order of add().
template <typename Scalar>
class CompensatedSum {
public:
    void add(Scalar x)
    {
        const Scalar t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Scalar value() const { return sum_ + comp_; }

private:
    Scalar sum_{};
    Scalar comp_{};
};

template <typename Scalar>
class CompensatedSum<std::complex<Scalar>> {
public:
    void add(const std::complex<Scalar>& x)
    {
        re_.add(x.real());
        im_.add(x.imag());
    }
    std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<Scalar> re_;
    CompensatedSum<Scalar> im_;
};

/// Pairwise summation with a fixed split, so the rounding pattern is
/// reproducible for a given input length.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> xs)
{
    if (xs.size() <= 8) {
        CompensatedSum<Scalar> acc;
        for (const auto& x : xs)
            acc.add(x);
        return acc.value();
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace diracsea
