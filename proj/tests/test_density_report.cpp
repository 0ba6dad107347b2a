#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "primedens/density_report.hpp"
#include "primedens/errors.hpp"
#include "primedens/mertens.hpp"
#include "primedens/report_format.hpp"

#include <cmath>
#include <sstream>

using namespace primedens;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = build_table(10'000'002);
    return t;
}

PolynomialFamily family(std::initializer_list<const char*> specs) {
    std::vector<IntPolynomial> polys;
    for (const char* s : specs) {
        polys.push_back(parse_polynomial(s));
    }
    return PolynomialFamily(std::move(polys));
}

} // namespace

TEST_CASE("predicted_count_integral examples") {
    CHECK(predicted_count_integral(0.0, 2, 1e8) == 0.0);
    CHECK(predicted_count_integral(1.0, 1, 2.0) == 0.0);
    // li(10^6) itself is 78627.55; the integral from 2 drops li(2) = 1.045
    CHECK(predicted_count_integral(1.0, 1, 1e6) == doctest::Approx(78626.50399568).epsilon(1e-10));
    CHECK(predicted_count_integral(1.3203236, 2, 1e8) == doctest::Approx(440367.78).epsilon(2e-7));
    CHECK(predicted_count_integral(1.0, 2, 1e4) == doctest::Approx(162.241237).epsilon(1e-8));
    CHECK(predicted_count_integral(1.0, 3, 1e6) == doctest::Approx(505.96233365).epsilon(1e-9));
    CHECK_THROWS_AS(predicted_count_integral(1.0, 1, 1.5), DomainError);
    CHECK_THROWS_AS(predicted_count_integral(1.0, 0, 10.0), DomainError);
    CHECK_THROWS_AS(predicted_count_integral(-1.0, 1, 10.0), DomainError);
}

TEST_CASE("quadrature agrees with the series oracle") {
    for (int k = 1; k <= 5; ++k) {
        for (double x : {3.0, 10.0, 1e3, 1e5, 1e7, 1e9, 1e12}) {
            const auto expected = static_cast<double>(oracle::integral_inverse_log_power(k, x));
            CAPTURE(k);
            CAPTURE(x);
            REQUIRE(predicted_count_integral(1.0, k, x) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("integral is increasing in x and linear in the constant") {
    double previous = 0.0;
    for (double x = 2.5; x < 1e9; x *= 1.7) {
        const double v = predicted_count_integral(1.0, 2, x);
        REQUIRE(v > previous);
        previous = v;
        REQUIRE(predicted_count_integral(3.5, 2, x) == doctest::Approx(3.5 * v).epsilon(1e-14));
    }
}

TEST_CASE("halving the tolerance stays within the tolerance") {
    for (int k = 1; k <= 4; ++k) {
        for (double x : {50.0, 1e6, 1e10}) {
            const double coarse = predicted_count_integral(1.0, k, x, 1e-9);
            const double fine = predicted_count_integral(1.0, k, x, 5e-10);
            REQUIRE(std::fabs(coarse - fine) <= 1e-9 * fine);
        }
    }
}

TEST_CASE("twin comparison rows") {
    const std::vector<std::uint64_t> checkpoints{10'000, 100'000, 1'000'000, 10'000'000};
    const auto result = run_comparison(OffsetTuple::twin(), table(), checkpoints, {.p_limit = 1'000'000});
    REQUIRE(result.rows.size() == 4);
    CHECK(result.series.admissible);
    CHECK(result.series.constant.value == doctest::Approx(1.3203236).epsilon(1e-7));
    const std::uint64_t expected[] = {205, 1224, 8169, 58980};
    double previous_predicted = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& row = result.rows[i];
        CHECK(row.x == checkpoints[i]);
        CHECK(row.empirical_count == expected[i]);
        CHECK(row.predicted_count > previous_predicted);
        previous_predicted = row.predicted_count;
        REQUIRE(row.ratio.has_value());
        CHECK(*row.ratio == doctest::Approx(row.empirical_count / row.predicted_count));
        CHECK(row.constant_used == result.series.constant.value);
        CHECK(row.truncation_limit == 1'000'000);
    }
    // 1e4 sits 4% low; from 1e5 on the rows are within 2%
    CHECK(*result.rows[0].ratio == doctest::Approx(0.957).epsilon(1e-3));
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(std::fabs(*result.rows[i].ratio - 1.0) < 0.02);
    }
}

TEST_CASE("inadmissible tuple gives a flagged row") {
    const std::vector<std::uint64_t> checkpoints{10, 1'000, 1'000'000};
    const auto result = run_comparison(OffsetTuple({0, 2, 4}), table(), checkpoints);
    CHECK_FALSE(result.series.admissible);
    CHECK(result.series.constant.value == 0.0);
    for (const auto& row : result.rows) {
        CHECK(row.empirical_count == 1);
        CHECK(row.predicted_count == 0.0);
        CHECK(row.flagged());
    }
}

TEST_CASE("checkpoint validation") {
    const std::vector<std::uint64_t> unsorted{100, 10};
    const std::vector<std::uint64_t> too_small{1, 10};
    const std::vector<std::uint64_t> too_large{100'000'000};
    CHECK_THROWS_AS(run_comparison(OffsetTuple::twin(), table(), unsorted), ConfigError);
    CHECK_THROWS_AS(run_comparison(OffsetTuple::twin(), table(), too_small), ConfigError);
    CHECK_THROWS_AS(run_comparison(OffsetTuple::twin(), table(), too_large), RangeError);
    CHECK(run_comparison(OffsetTuple::twin(), table(), std::vector<std::uint64_t>{}).rows.empty());
}

TEST_CASE("x^2+1 comparison") {
    const std::vector<std::uint64_t> checkpoints{1'000, 10'000, 100'000};
    const auto result = run_comparison(family({"x^2+1"}), table(), checkpoints, {.p_limit = 1'000'000});
    REQUIRE(result.rows.size() == 3);
    CHECK(result.irreducibility == std::vector{Irreducibility::irreducible});
    CHECK(result.constant.constant.truncation_limit == kRootBruteForceCeiling);
    const std::uint64_t expected[] = {112, 841, 6656};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(result.rows[i].empirical_count == expected[i]);
        REQUIRE(result.rows[i].ratio.has_value());
        CHECK(*result.rows[i].ratio > 0.9);
        CHECK(*result.rows[i].ratio < 1.1);
        CHECK(result.rows[i].predicted_count ==
              doctest::Approx(predicted_count_integral(result.constant.constant.value / 2, 1,
                                                       static_cast<double>(checkpoints[i]))));
    }
}

TEST_CASE("fixed divisor family gives flagged rows") {
    const std::vector<std::uint64_t> checkpoints{100, 1'000};
    const auto result = run_comparison(family({"x^2+x+2"}), table(), checkpoints, {.p_limit = 1'000});
    CHECK(result.constant.fixed_divisor == 2u);
    for (const auto& row : result.rows) {
        CHECK(row.empirical_count == 0);
        CHECK(row.flagged());
    }
}

TEST_CASE("comparison is thread-count invariant") {
    const std::vector<std::uint64_t> checkpoints{1'000, 100'000, 5'000'000};
    const auto one = run_comparison(OffsetTuple({0, 2, 6}), table(), checkpoints, {.threads = 1});
    const auto four = run_comparison(OffsetTuple({0, 2, 6}), table(), checkpoints, {.threads = 4});
    std::ostringstream a;
    std::ostringstream b;
    write_comparison_csv(one.rows, a);
    write_comparison_csv(four.rows, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("dependency trend") {
    const auto small = build_table(1'000'000);
    const std::vector<std::uint64_t> ladder{10'000, 1'000'000, 100'000'000, 10'000'000'000,
                                            1'000'000'000'000};
    const auto trend = dependency_trend_report(small, ladder);
    REQUIRE(trend.rows.size() == 5);
    CHECK(trend.errors_nonincreasing);
    CHECK(trend.rows.back().abs_error < 0.01);
    for (const auto& row : trend.rows) {
        CHECK(row.abs_error == doctest::Approx(std::fabs(row.ratio - constants::half_e_gamma())));
        CHECK(row.ratio == dependency_ratio(small, row.x));
    }

    const std::vector<std::uint64_t> four{4};
    const auto single = dependency_trend_report(small, four);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].ratio == doctest::Approx(1.44269504089).epsilon(1e-11));

    CHECK(dependency_trend_report(small, std::vector<std::uint64_t>{}).rows.empty());

    const std::vector<std::uint64_t> beyond{10'000'000'000'000};
    CHECK_THROWS_AS(dependency_trend_report(small, beyond), RangeError);
}

TEST_CASE("CSV and JSON rows") {
    std::vector<DensityComparison> rows(2);
    rows[0] = {100, 8, 7.5, 8 / 7.5, 1.25, 1000};
    rows[1] = {1000, 1, 0.0, std::nullopt, 0.0, 1000};
    std::ostringstream csv;
    write_comparison_csv(rows, csv);
    CHECK(csv.str() ==
          "x,empirical,predicted,ratio,constant,truncation\n"
          "100,8,7.5,1.0666666666666667,1.25,1000\n"
          "1000,1,0,nan,0,1000\n");

    const auto json = comparison_rows_json(rows);
    REQUIRE(json.size() == 2);
    CHECK(json[0]["x"] == 100);
    CHECK(json[0]["empirical"] == 8);
    CHECK(json[0]["ratio"].get<double>() == 8 / 7.5);
    CHECK(json[1]["ratio"].is_null());
    CHECK(json[0].size() == 6);

    DependencyTrend trend;
    trend.rows.push_back({4, 1.5, 0.5});
    std::ostringstream trend_csv;
    write_trend_csv(trend, trend_csv);
    CHECK(trend_csv.str() == "x,ratio,abs_error\n4,1.5,0.5\n");
    CHECK(trend_rows_json(trend)[0]["abs_error"] == 0.5);

    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_output_format("xml"), ConfigError);
}
