#include "primedens/report_suite.hpp"

#include "primedens/bateman_horn.hpp"
#include "primedens/constellations.hpp"
#include "primedens/density_report.hpp"
#include "primedens/mertens.hpp"
#include "primedens/report_format.hpp"

#include <fmt/format.h>

#include <cmath>
#include <random>
#include <sstream>

namespace primedens {
namespace {

double relative_difference(double a, double b) {
    return std::fabs(a - b) / std::fabs(b);
}

PolynomialFamily family_of(std::initializer_list<const char*> specs) {
    std::vector<IntPolynomial> polys;
    for (const char* s : specs) {
        polys.push_back(parse_polynomial(s));
    }
    return PolynomialFamily(std::move(polys));
}

} // namespace

std::vector<CheckResult> run_report_suite(unsigned threads) {
    std::vector<CheckResult> results;
    const auto table = build_table(100'000'002, {.threads = threads});
    const OffsetTuple twin = OffsetTuple::twin();

    {
        const double ratio = dependency_ratio(table, 1'000'000'000'000);
        const double error = std::fabs(ratio - 0.8905362);
        results.push_back({1, "dependency ratio at 1e12", error <= 0.01,
                           fmt::format("ratio {:.7f}, |ratio - 0.8905362| = {:.2e}", ratio, error)});
    }
    {
        double previous = 1.0;
        bool ladder = true;
        double last = 0.0;
        for (std::uint64_t y : {1'000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
            last = std::fabs(mertens_theorem_check(table, y) - 1.0);
            ladder = ladder && last <= previous;
            previous = last;
        }
        results.push_back({2, "Mertens product ladder", ladder && last < 5e-3,
                           fmt::format("|check(1e6) - 1| = {:.2e}, ladder {}", last,
                                       ladder ? "monotone" : "broken")});
    }
    const auto series = singular_series(twin, table, 1'000'000, threads);
    const auto closed = twin_constant_closed_form(table, 1'000'000);
    {
        const double rel = relative_difference(series.constant.value, closed.value);
        const bool exact = dependency_ratio_product(table, 1'000'000'000'000) == closed.value;
        results.push_back({3, "twin constant routes agree",
                           rel < 1e-12 && exact && closed.last_doubling_delta < 1e-6,
                           fmt::format("C = {:.10f}, rel diff {:.1e}, doubling delta {:.1e}",
                                       closed.value, rel, closed.last_doubling_delta)});
    }
    const std::uint64_t twins = count_constellations(table, twin, 100'000'000, threads);
    {
        const double predicted = predicted_count_integral(series.constant.value, 2, 1e8);
        const double ratio = static_cast<double>(twins) / predicted;
        results.push_back({4, "twin count at 1e8", std::fabs(ratio - 1.0) < 0.01,
                           fmt::format("empirical {}, predicted {:.1f}, ratio {:.5f}", twins,
                                       predicted, ratio)});
    }
    {
        const double ratio = empirical_conditional_ratio(table, 100'000'000, threads);
        const double rel = relative_difference(ratio, series.constant.value);
        results.push_back({5, "empirical conditional ratio at 1e8", rel < 0.05,
                           fmt::format("C(1e8) = {:.5f}, {:.2f}% from C", ratio, 100 * rel)});
    }
    {
        const auto family = family_of({"x", "x+2"});
        const auto bh = bateman_horn_constant(family, table, 1'000'000, threads);
        const double rel = relative_difference(bh.constant.value, series.constant.value);
        bool counts_match = true;
        for (std::uint64_t x : {100ULL, 10'000ULL, 1'000'000ULL}) {
            counts_match = counts_match && count_prime_values(family, table, x, ValuePrimality::sieve_only,
                                                              threads) ==
                                               count_constellations(table, twin, x, threads);
        }
        results.push_back({6, "Bateman-Horn {x, x+2} matches twins", rel < 1e-12 && counts_match,
                           fmt::format("rel diff {:.1e}, counts {}", rel,
                                       counts_match ? "equal" : "differ")});
    }
    {
        const auto family = family_of({"x^2+1"});
        const auto bh = bateman_horn_constant(family, table, 1'000'000, threads);
        const std::uint64_t count = count_prime_values(
            family, table, 1'000'000, ValuePrimality::deterministic_fallback, threads);
        const double predicted = predicted_count_integral(bh.constant.value / 2.0, 1, 1e6);
        const double ratio = static_cast<double>(count) / predicted;
        results.push_back({7, "x^2+1 count at 1e6", std::fabs(ratio - 1.0) < 0.02,
                           fmt::format("E = {:.6f}, empirical {}, predicted {:.1f}, ratio {:.5f}",
                                       bh.constant.value, count, predicted, ratio)});
    }
    {
        // scan and offsets routes for w(p); scan and pointwise evaluation for alpha(p)
        std::mt19937_64 rng(20240601);
        const auto small_primes = primes_up_to(table, 1000);
        std::uniform_int_distribution<std::size_t> pick(0, small_primes.size() - 1);
        std::uniform_int_distribution<std::int64_t> coefficient(-20, 20);
        std::uniform_int_distribution<std::uint64_t> gap(1, 15);
        std::uniform_int_distribution<int> small(1, 5);
        int mismatches = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<std::uint64_t> offsets{0};
            for (int i = 1, k = small(rng); i < k; ++i) {
                offsets.push_back(offsets.back() + 2 * gap(rng));
            }
            const OffsetTuple tuple(offsets);
            const std::uint64_t p = small_primes[pick(rng)];
            mismatches += residue_count_by_scan(tuple, p) != residue_count_by_offsets(tuple, p);

            std::vector<std::int64_t> c(static_cast<std::size_t>(small(rng) % 4 + 2));
            for (auto& v : c) {
                v = coefficient(rng);
            }
            c.back() = std::abs(c.back()) + 1;
            const PolynomialFamily family({IntPolynomial(c)});
            std::uint64_t direct = 0;
            for (std::uint64_t x = 0; x < p; ++x) {
                direct += poly_eval_mod(family.polys()[0], x, p) == 0;
            }
            mismatches += root_count(family, p) != direct;
        }
        results.push_back({8, "residue and root count routes agree", mismatches == 0,
                           fmt::format("{} mismatches over 2000 cases", mismatches)});
    }
    {
        const OffsetTuple triple({0, 2, 4});
        const auto s = singular_series(triple, table, 1'000'000, threads);
        const std::uint64_t hits = count_constellations(table, triple, 1'000'000, threads);
        const auto bh = bateman_horn_constant(family_of({"x^2+x+2"}), table, 1'000'000, threads);
        const bool ok = s.constant.value == 0.0 && !s.admissible && hits == 1 &&
                        bh.constant.value == 0.0 && bh.fixed_divisor == 2u;
        results.push_back({9, "degenerate inputs", ok,
                           fmt::format("(0,2,4): constant {}, hits {}; x^2+x+2: constant {}, divisor {}",
                                       s.constant.value, hits, bh.constant.value,
                                       bh.fixed_divisor.value_or(0))});
    }
    {
        const std::vector<std::uint64_t> checkpoints{1'000, 10'000, 100'000, 1'000'000};
        auto render = [&](unsigned t) {
            std::ostringstream out;
            write_comparison_csv(
                run_comparison(twin, table, checkpoints, {.p_limit = 100'000, .threads = t}).rows, out);
            return out.str();
        };
        const bool same = render(1) == render(4) && render(1) == render(1);
        results.push_back({10, "thread-count determinism", same,
                           same ? "identical CSV for 1 and 4 threads" : "CSV differs"});
    }
    return results;
}

} // namespace primedens
