#include "primedens/summation.hpp"

#include <cmath>

namespace primedens {

void CompensatedSum::add(double term) noexcept {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
        compensation_ += (sum_ - t) + term;
    } else {
        compensation_ += (term - t) + sum_;
    }
    sum_ = t;
}

double doubling_delta(double full, double half) noexcept {
    if (full == 0.0) {
        return 0.0;
    }
    return std::fabs(full - half) / std::fabs(full);
}

} // namespace primedens
