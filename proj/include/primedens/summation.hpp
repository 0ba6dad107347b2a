#pragma once

#include <cstdint>

namespace primedens {

/// Neumaier's variant of Kahan summation: the rounding error of every
/// addition is carried in a separate compensation term.
class CompensatedSum {
public:
    void add(double term) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// An infinite product over primes cut off at p <= truncation_limit.
struct TruncatedConstant {
    double value = 0.0;
    std::uint64_t truncation_limit = 0;
    // |value(P) - value(P/2)| / value(P); zero when value is zero.
    double last_doubling_delta = 0.0;
};

/// Relative change between the product at P and at P/2.
double doubling_delta(double full, double half) noexcept;

} // namespace primedens
