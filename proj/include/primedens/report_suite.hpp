#pragma once

#include <string>
#include <vector>

namespace primedens {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The canned verification run behind `primedens report`: dependency ratio,
/// Mertens ladder, twin constant routes, twin and x^2+1 counting, oracle
/// agreement, degenerate inputs and thread-count determinism. Builds a sieve
/// to 10^8 + 2; takes a few seconds.
std::vector<CheckResult> run_report_suite(unsigned threads = 1);

} // namespace primedens
