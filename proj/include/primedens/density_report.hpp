#pragma once

#include "primedens/bateman_horn.hpp"
#include "primedens/constellations.hpp"
#include "primedens/prime_table.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace primedens {

/// Empirical against predicted counting at one checkpoint.
struct DensityComparison {
    std::uint64_t x = 0;
    std::uint64_t empirical_count = 0;
    double predicted_count = 0.0;
    // empty when the prediction is zero (inadmissible tuple, fixed divisor)
    std::optional<double> ratio;
    double constant_used = 0.0;
    std::uint64_t truncation_limit = 0;

    bool flagged() const noexcept { return !ratio.has_value(); }
};

/// constant * integral_2^x dt / ln^k t by adaptive Gauss-Kronrod quadrature.
/// Throws DomainError for x < 2, k < 1 or constant < 0.
double predicted_count_integral(double constant, int k, double x, double relative_tolerance = 1e-9);

struct ComparisonOptions {
    std::uint64_t p_limit = 1'000'000;
    unsigned threads = 1;
    double relative_tolerance = 1e-9;
};

struct TupleComparison {
    SingularSeries series;
    std::vector<DensityComparison> rows;
};

struct FamilyComparison {
    BatemanHornConstant constant;
    std::vector<Irreducibility> irreducibility; // one per polynomial
    std::vector<DensityComparison> rows;
};

/// One row per checkpoint, ascending. Checkpoints must be strictly
/// increasing and >= 2; each must satisfy the counting preconditions.
TupleComparison run_comparison(const OffsetTuple& tuple, const PrimeTable& table,
                               std::span<const std::uint64_t> checkpoints,
                               const ComparisonOptions& options = {});

/// Predicted counts use E / H. Values past the sieve follow `mode`.
FamilyComparison run_comparison(const PolynomialFamily& family, const PrimeTable& table,
                                std::span<const std::uint64_t> checkpoints,
                                const ComparisonOptions& options = {},
                                ValuePrimality mode = ValuePrimality::deterministic_fallback);

struct DependencyTrendRow {
    std::uint64_t x = 0;
    double ratio = 0.0;
    double abs_error = 0.0; // |ratio - exp(gamma)/2|
};

struct DependencyTrend {
    std::vector<DependencyTrendRow> rows;
    bool errors_nonincreasing = true;
};

/// dependency_ratio at each checkpoint with its distance from exp(gamma)/2.
DependencyTrend dependency_trend_report(const PrimeTable& table,
                                        std::span<const std::uint64_t> checkpoints);

} // namespace primedens
