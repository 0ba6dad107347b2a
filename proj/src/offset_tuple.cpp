#include "primedens/offset_tuple.hpp"

#include "primedens/errors.hpp"

#include <charconv>
#include <limits>

namespace primedens {

OffsetTuple::OffsetTuple(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) {
        throw ConfigError("offset tuple must have at least one offset");
    }
    if (offsets_.front() != 0) {
        throw ConfigError("offset tuple must start at 0");
    }
    // keeps x + offset representable for any x inside a sieve
    constexpr std::uint64_t kMaxOffset = std::uint64_t{1} << 32;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (offsets_[i] % 2 != 0) {
            throw ConfigError("offset " + std::to_string(offsets_[i]) + " is odd");
        }
        if (offsets_[i] > kMaxOffset) {
            throw ConfigError("offset " + std::to_string(offsets_[i]) + " too large");
        }
        if (i > 0 && offsets_[i] <= offsets_[i - 1]) {
            throw ConfigError("offsets must be strictly increasing");
        }
    }
}

std::string OffsetTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(offsets_[i]);
    }
    return out;
}

OffsetTuple parse_tuple(std::string_view text) {
    std::vector<std::uint64_t> offsets;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
            item.remove_prefix(1);
        }
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
            item.remove_suffix(1);
        }
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
            throw ConfigError("malformed tuple entry '" + std::string(item) + "' in '" +
                              std::string(text) + "'");
        }
        offsets.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return OffsetTuple(std::move(offsets));
}

} // namespace primedens
