#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primedens {

/// A prime-constellation pattern (0, h_1, ..., h_{k-1}).
///
/// Offsets are even, strictly increasing and start at 0. Inadmissible
/// patterns such as (0, 2, 4) are valid values; admissibility is a
/// separate question answered by is_admissible().
class OffsetTuple {
public:
    /// Throws ConfigError when the offsets violate the invariants.
    explicit OffsetTuple(std::vector<std::uint64_t> offsets);

    static OffsetTuple twin() { return OffsetTuple({0, 2}); }

    std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
    std::size_t size() const noexcept { return offsets_.size(); }
    std::uint64_t max_offset() const noexcept { return offsets_.back(); }

    /// "0,2,6"
    std::string to_string() const;

    friend bool operator==(const OffsetTuple&, const OffsetTuple&) = default;

private:
    std::vector<std::uint64_t> offsets_;
};

/// Parses comma-separated offsets such as "0,2,6,8". Whitespace around
/// entries is ignored. Throws ConfigError on malformed or invalid input.
OffsetTuple parse_tuple(std::string_view text);

} // namespace primedens
