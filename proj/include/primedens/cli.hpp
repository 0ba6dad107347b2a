#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primedens/report_format.hpp"

namespace primedens::cli {

/// Process exit codes, one per error class.
enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kConfigError = 2,   // usage, malformed tuple or polynomial, bad flag value
    kRangeError = 3,    // a computation needs more sieve than configured
    kOverflowError = 4, // polynomial values beyond the 64-bit ceiling
    kCheckFailed = 5,   // `report` ran and at least one check failed
};

struct RunConfig {
    std::uint64_t sieve_limit = 0;
    std::uint64_t truncation_limit = 1'000'000;
    std::vector<std::uint64_t> checkpoints; // ascending
    OutputFormat output_format = OutputFormat::text;
    std::optional<std::string> output_path;
    unsigned threads = 1;
};

/// Parses a nonnegative integer written plainly or in scientific notation
/// ("100000000", "1e8", "2.5e3"). Throws ConfigError if the value is not an
/// exact integer or does not fit 64 bits.
std::uint64_t parse_count(std::string_view text);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace primedens::cli
