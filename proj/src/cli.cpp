#include "primedens/cli.hpp"

#include "primedens/bateman_horn.hpp"
#include "primedens/constellations.hpp"
#include "primedens/density_report.hpp"
#include "primedens/errors.hpp"
#include "primedens/mertens.hpp"
#include "primedens/primality.hpp"
#include "primedens/report_suite.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace primedens::cli {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kDefaultLimit = 1'000'000;
// Polynomial values above this are tested one by one instead of sieved.
constexpr std::uint64_t kValueSieveCap = 100'000'000;

struct RawOptions {
    std::string xmax;
    std::string checkpoints;
    std::string plimit;
    std::string sieve;
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
};

void add_common_options(CLI::App& sub, RawOptions& raw, bool counting) {
    if (counting) {
        sub.add_option("--xmax", raw.xmax, "largest x counted (default 1e6)");
        sub.add_option("--plimit", raw.plimit, "prime bound for the constant (default 1e6)");
        sub.add_option("--checkpoints", raw.checkpoints, "comma-separated checkpoints");
    }
    sub.add_option("--sieve", raw.sieve, "override the derived sieve limit");
    sub.add_option("--format", raw.format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub.add_option("--out", raw.out, "write the report to PATH");
    sub.add_option("--threads", raw.threads, "worker threads")->check(CLI::Range(1u, 1024u));
}

std::vector<std::uint64_t> parse_checkpoint_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        values.push_back(parse_count(item));
    }
    if (values.empty()) {
        throw ConfigError("empty checkpoint list");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<std::uint64_t> powers_of_ten_up_to(std::uint64_t xmax) {
    std::vector<std::uint64_t> values;
    for (std::uint64_t x = 10; x <= xmax; x *= 10) {
        values.push_back(x);
        if (x > std::numeric_limits<std::uint64_t>::max() / 10) {
            break;
        }
    }
    if (values.empty() || values.back() != xmax) {
        values.push_back(xmax);
    }
    return values;
}

RunConfig resolve_counting(const RawOptions& raw) {
    RunConfig config;
    config.output_format = parse_output_format(raw.format);
    config.threads = raw.threads;
    if (!raw.out.empty()) {
        config.output_path = raw.out;
    }
    config.truncation_limit = raw.plimit.empty() ? kDefaultLimit : parse_count(raw.plimit);
    if (config.truncation_limit < 2) {
        throw ConfigError("--plimit must be at least 2");
    }
    const std::uint64_t xmax = raw.xmax.empty() ? 0 : parse_count(raw.xmax);
    if (!raw.checkpoints.empty()) {
        config.checkpoints = parse_checkpoint_list(raw.checkpoints);
        if (xmax != 0 && config.checkpoints.back() > xmax) {
            throw ConfigError("checkpoint above --xmax");
        }
    } else {
        const std::uint64_t top = raw.xmax.empty() ? kDefaultLimit : xmax;
        if (top < 2) {
            throw ConfigError("--xmax must be at least 2");
        }
        config.checkpoints = powers_of_ten_up_to(top);
    }
    if (config.checkpoints.front() < 2) {
        throw ConfigError("checkpoints must be at least 2");
    }
    return config;
}

void apply_sieve_override(RunConfig& config, const RawOptions& raw) {
    if (!raw.sieve.empty()) {
        config.sieve_limit = parse_count(raw.sieve);
    }
    if (config.sieve_limit < config.truncation_limit) {
        throw ConfigError(fmt::format("sieve limit {} below truncation limit {}", config.sieve_limit,
                                      config.truncation_limit));
    }
}

std::string describe(const TruncatedConstant& c) {
    return fmt::format("{:.12f} (p <= {}, doubling delta {:.3e})", c.value, c.truncation_limit,
                       c.last_doubling_delta);
}

std::string cmd_mertens_ratio(const RawOptions& raw) {
    if (raw.checkpoints.empty()) {
        throw ConfigError("mertens-ratio requires --checkpoints");
    }
    RunConfig config;
    config.output_format = parse_output_format(raw.format);
    config.checkpoints = parse_checkpoint_list(raw.checkpoints);
    if (config.checkpoints.front() < 4) {
        throw ConfigError("mertens-ratio checkpoints must be at least 4");
    }
    config.sieve_limit = std::max<std::uint64_t>(2, isqrt(config.checkpoints.back()));
    config.truncation_limit = config.sieve_limit;
    if (!raw.sieve.empty()) {
        config.sieve_limit = parse_count(raw.sieve);
    }

    const auto table = build_table(config.sieve_limit, {.threads = raw.threads});
    const auto trend = dependency_trend_report(table, config.checkpoints);

    std::ostringstream out;
    switch (config.output_format) {
    case OutputFormat::csv:
        write_trend_csv(trend, out);
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["target"] = constants::half_e_gamma();
        doc["errors_nonincreasing"] = trend.errors_nonincreasing;
        doc["rows"] = trend_rows_json(trend);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::text:
        write_trend_text(trend, out);
        break;
    }
    return out.str();
}

std::string cmd_tuple(const RawOptions& raw, const std::string& spec) {
    const OffsetTuple tuple = parse_tuple(spec);
    RunConfig config = resolve_counting(raw);
    config.sieve_limit = std::max(config.checkpoints.back() + tuple.max_offset(), config.truncation_limit);
    apply_sieve_override(config, raw);

    const auto table = build_table(config.sieve_limit, {.threads = config.threads});
    const auto result = run_comparison(tuple, table, config.checkpoints,
                                       {.p_limit = config.truncation_limit, .threads = config.threads});
    const auto& c = result.series.constant;

    std::ostringstream out;
    switch (config.output_format) {
    case OutputFormat::csv:
        fmt::print(out, "# tuple {}\n# k {}\n# admissible {}\n# constant {}\n# truncation {}\n"
                        "# doubling_delta {}\n",
                   tuple.to_string(), tuple.size(), result.series.admissible, c.value,
                   c.truncation_limit, c.last_doubling_delta);
        write_comparison_csv(result.rows, out);
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["tuple"] = tuple.to_string();
        doc["k"] = tuple.size();
        doc["admissible"] = result.series.admissible;
        doc["constant"] = c.value;
        doc["truncation"] = c.truncation_limit;
        doc["doubling_delta"] = c.last_doubling_delta;
        doc["rows"] = comparison_rows_json(result.rows);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::text:
        fmt::print(out, "tuple ({})  k = {}  admissible = {}\n", tuple.to_string(), tuple.size(),
                   result.series.admissible ? "yes" : "no");
        fmt::print(out, "singular series {}\n", describe(c));
        fmt::print(out, "sieve limit {}\n", config.sieve_limit);
        write_comparison_text(result.rows, out);
        break;
    }
    return out.str();
}

std::string cmd_bh(const RawOptions& raw, const std::vector<std::string>& specs) {
    std::vector<IntPolynomial> polys;
    for (const auto& spec : specs) {
        polys.push_back(parse_polynomial(spec));
    }
    const PolynomialFamily family(std::move(polys));
    RunConfig config = resolve_counting(raw);

    std::uint64_t largest_value = 0;
    for (const auto& g : family.polys()) {
        const auto x = static_cast<std::int64_t>(
            std::min<std::uint64_t>(config.checkpoints.back(), std::numeric_limits<std::int64_t>::max()));
        std::int64_t v = 0;
        try {
            v = poly_eval(g, x);
        } catch (const ArithmeticError&) {
            v = std::numeric_limits<std::int64_t>::max();
        }
        largest_value = std::max(largest_value, static_cast<std::uint64_t>(std::max<std::int64_t>(v, 0)));
    }
    config.sieve_limit = std::max({config.truncation_limit, std::uint64_t{2},
                                   std::min(largest_value, kValueSieveCap)});
    apply_sieve_override(config, raw);

    const auto table = build_table(config.sieve_limit, {.threads = config.threads});
    const auto result = run_comparison(family, table, config.checkpoints,
                                       {.p_limit = config.truncation_limit, .threads = config.threads});
    const auto& c = result.constant.constant;

    std::vector<std::string> screens;
    for (auto s : result.irreducibility) {
        screens.emplace_back(to_string(s));
    }
    const std::string divisor =
        result.constant.fixed_divisor ? std::to_string(*result.constant.fixed_divisor) : "none";

    std::ostringstream out;
    switch (config.output_format) {
    case OutputFormat::csv:
        fmt::print(out, "# family {}\n# k {}\n# H {}\n# irreducibility {}\n# fixed_divisor {}\n"
                        "# constant {}\n# truncation {}\n# requested_truncation {}\n"
                        "# doubling_delta {}\n",
                   family.to_string(), family.size(), family.degree_product(),
                   fmt::join(screens, ","), divisor, c.value, c.truncation_limit,
                   result.constant.requested_limit, c.last_doubling_delta);
        write_comparison_csv(result.rows, out);
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["family"] = nlohmann::ordered_json::array();
        for (const auto& g : family.polys()) {
            doc["family"].push_back(g.to_string());
        }
        doc["k"] = family.size();
        doc["H"] = family.degree_product();
        doc["irreducibility"] = screens;
        doc["fixed_divisor"] = result.constant.fixed_divisor
                                   ? nlohmann::ordered_json(*result.constant.fixed_divisor)
                                   : nlohmann::ordered_json();
        doc["constant"] = c.value;
        doc["truncation"] = c.truncation_limit;
        doc["requested_truncation"] = result.constant.requested_limit;
        doc["doubling_delta"] = c.last_doubling_delta;
        doc["rows"] = comparison_rows_json(result.rows);
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::text:
        fmt::print(out, "family {}  k = {}  H = {}\n", family.to_string(), family.size(),
                   family.degree_product());
        fmt::print(out, "irreducibility {}\n", fmt::join(screens, ", "));
        fmt::print(out, "fixed prime divisor {}\n", divisor);
        fmt::print(out, "Bateman-Horn constant {}\n", describe(c));
        if (c.truncation_limit != result.constant.requested_limit) {
            fmt::print(out, "  (requested p <= {}; residue scans stop at {})\n",
                       result.constant.requested_limit, kRootBruteForceCeiling);
        }
        fmt::print(out, "sieve limit {}\n", config.sieve_limit);
        write_comparison_text(result.rows, out);
        break;
    }
    return out.str();
}

std::pair<std::string, bool> cmd_report(const RawOptions& raw) {
    const OutputFormat format = parse_output_format(raw.format);
    const auto results = run_report_suite(raw.threads);
    const bool all_passed =
        std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

    std::ostringstream out;
    switch (format) {
    case OutputFormat::csv:
        out << "id,name,passed,detail\n";
        for (const auto& r : results) {
            fmt::print(out, "{},\"{}\",{},\"{}\"\n", r.id, r.name, r.passed, r.detail);
        }
        break;
    case OutputFormat::json: {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            doc.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case OutputFormat::text:
        for (const auto& r : results) {
            fmt::print(out, "[{}] {:>2} {}: {}\n", r.passed ? "PASS" : "FAIL", r.id, r.name, r.detail);
        }
        fmt::print(out, "{} of {} checks passed\n",
                   std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }),
                   results.size());
        break;
    }
    return {out.str(), all_passed};
}

void emit(const std::string& report, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << report;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open output file '" + path + "'");
    }
    file << report;
    if (!file) {
        throw ConfigError("failed writing '" + path + "'");
    }
}

} // namespace

std::uint64_t parse_count(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() -> std::uint64_t {
        throw ConfigError("'" + original + "' is not a nonnegative integer");
    };
    std::size_t pos = 0;
    std::string digits;
    std::size_t fraction_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++fraction_digits;
        }
    }
    if (digits.empty()) {
        return fail();
    }
    std::uint64_t exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exponent = exponent * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
            if (exponent > 40) {
                return fail();
            }
        }
        if (pos == start) {
            return fail();
        }
    }
    if (pos != text.size()) {
        return fail();
    }
    // drop fractional digits that the exponent cannot absorb, if they are zeros
    while (fraction_digits > exponent) {
        if (digits.back() != '0') {
            return fail();
        }
        digits.pop_back();
        --fraction_digits;
    }
    exponent -= fraction_digits;
    u128 value = 0;
    constexpr u128 kMax = std::numeric_limits<std::uint64_t>::max();
    for (char d : digits) {
        value = value * 10 + static_cast<unsigned>(d - '0');
        if (value > kMax) {
            return fail();
        }
    }
    for (std::uint64_t i = 0; i < exponent; ++i) {
        value *= 10;
        if (value > kMax) {
            return fail();
        }
    }
    return static_cast<std::uint64_t>(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime-product constants and prime-constellation densities", "primedens"};
    app.require_subcommand(1);
    RawOptions raw;

    auto* mertens = app.add_subcommand("mertens-ratio", "dependency ratio against exp(gamma)/2");
    add_common_options(*mertens, raw, false);
    mertens->add_option("--checkpoints", raw.checkpoints, "comma-separated x values");

    std::string tuple_spec;
    auto* tuple = app.add_subcommand("tuple", "singular series and counts for an offset tuple");
    tuple->add_option("offsets", tuple_spec, "comma-separated even offsets, e.g. 0,2,6")->required();
    add_common_options(*tuple, raw, true);

    std::vector<std::string> poly_specs;
    auto* bh = app.add_subcommand("bh", "Bateman-Horn constant and counts for a polynomial family");
    bh->add_option("polynomials", poly_specs, "polynomials such as x^2+1")->required();
    add_common_options(*bh, raw, true);

    auto* report = app.add_subcommand("report", "run the canned verification suite");
    report->add_option("--format", raw.format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    report->add_option("--out", raw.out, "write the report to PATH");
    report->add_option("--threads", raw.threads, "worker threads")->check(CLI::Range(1u, 1024u));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kConfigError;
    }

    try {
        if (mertens->parsed()) {
            emit(cmd_mertens_ratio(raw), raw.out, out);
        } else if (tuple->parsed()) {
            emit(cmd_tuple(raw, tuple_spec), raw.out, out);
        } else if (bh->parsed()) {
            emit(cmd_bh(raw, poly_specs), raw.out, out);
        } else if (report->parsed()) {
            auto [text, passed] = cmd_report(raw);
            emit(text, raw.out, out);
            return passed ? kSuccess : kCheckFailed;
        }
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return kRangeError;
    } catch (const ArithmeticError& e) {
        err << "overflow: " << e.what() << '\n';
        return kOverflowError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace primedens::cli
