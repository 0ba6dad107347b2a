#include "primedens/density_report.hpp"

#include "primedens/errors.hpp"
#include "primedens/mertens.hpp"
#include "primedens/summation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace primedens {
namespace {

void require_ascending(std::span<const std::uint64_t> checkpoints, std::uint64_t minimum) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < minimum) {
            throw ConfigError("checkpoint " + std::to_string(checkpoints[i]) + " below " +
                              std::to_string(minimum));
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw ConfigError("checkpoints must be strictly increasing");
        }
    }
}

DensityComparison make_row(std::uint64_t x, std::uint64_t empirical, double predicted,
                           double constant, std::uint64_t truncation) {
    DensityComparison row;
    row.x = x;
    row.empirical_count = empirical;
    row.predicted_count = predicted;
    if (predicted > 0.0) {
        row.ratio = static_cast<double>(empirical) / predicted;
    }
    row.constant_used = constant;
    row.truncation_limit = truncation;
    return row;
}

} // namespace

double predicted_count_integral(double constant, int k, double x, double relative_tolerance) {
    if (!(x >= 2.0)) {
        throw DomainError("predicted count needs x >= 2");
    }
    if (k < 1) {
        throw DomainError("predicted count needs k >= 1");
    }
    if (constant < 0.0) {
        throw DomainError("predicted count needs a nonnegative constant");
    }
    if (constant == 0.0 || x == 2.0) {
        return 0.0;
    }
    // t = e^u turns the integrand into e^u / u^k on [ln 2, ln x]; unit-length
    // pieces keep the exponential well resolved.
    const auto integrand = [k](double u) { return std::exp(u) / std::pow(u, k); };
    const double a = std::log(2.0);
    const double b = std::log(x);
    CompensatedSum total;
    for (double lo = a; lo < b; lo += 1.0) {
        const double hi = std::min(lo + 1.0, b);
        double error = 0.0;
        total.add(boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            integrand, lo, hi, 20, relative_tolerance, &error));
    }
    return constant * total.value();
}

TupleComparison run_comparison(const OffsetTuple& tuple, const PrimeTable& table,
                               std::span<const std::uint64_t> checkpoints,
                               const ComparisonOptions& options) {
    require_ascending(checkpoints, 2);
    TupleComparison result{singular_series(tuple, table, options.p_limit, options.threads), {}};
    const double constant = result.series.constant.value;
    const int k = static_cast<int>(tuple.size());

    std::uint64_t running = 0;
    std::uint64_t previous = 0;
    for (std::uint64_t x : checkpoints) {
        running += count_constellations_in(table, tuple, previous + (previous == 0 ? 0 : 1), x,
                                           options.threads);
        previous = x;
        const double predicted =
            predicted_count_integral(constant, k, static_cast<double>(x), options.relative_tolerance);
        result.rows.push_back(
            make_row(x, running, predicted, constant, result.series.constant.truncation_limit));
    }
    return result;
}

FamilyComparison run_comparison(const PolynomialFamily& family, const PrimeTable& table,
                                std::span<const std::uint64_t> checkpoints,
                                const ComparisonOptions& options, ValuePrimality mode) {
    require_ascending(checkpoints, 2);
    FamilyComparison result;
    result.constant = bateman_horn_constant(family, table, options.p_limit, options.threads);
    for (const auto& g : family.polys()) {
        result.irreducibility.push_back(screen_irreducibility(g));
    }
    const double constant = result.constant.constant.value;
    const double density_constant = constant / static_cast<double>(family.degree_product());
    const int k = static_cast<int>(family.size());

    std::uint64_t running = 0;
    std::uint64_t previous = 0;
    for (std::uint64_t x : checkpoints) {
        running += count_prime_values_in(family, table, previous + 1, x, mode, options.threads);
        previous = x;
        const double predicted = predicted_count_integral(density_constant, k, static_cast<double>(x),
                                                          options.relative_tolerance);
        result.rows.push_back(
            make_row(x, running, predicted, constant, result.constant.constant.truncation_limit));
    }
    return result;
}

DependencyTrend dependency_trend_report(const PrimeTable& table,
                                        std::span<const std::uint64_t> checkpoints) {
    DependencyTrend trend;
    const double target = constants::half_e_gamma();
    for (std::uint64_t x : checkpoints) {
        const double ratio = dependency_ratio(table, x);
        const double error = std::fabs(ratio - target);
        if (!trend.rows.empty() && error > trend.rows.back().abs_error) {
            trend.errors_nonincreasing = false;
        }
        trend.rows.push_back(DependencyTrendRow{x, ratio, error});
    }
    return trend;
}

} // namespace primedens
