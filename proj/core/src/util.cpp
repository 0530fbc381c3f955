#include "semclass/util.hpp"

#include <charconv>
#include <system_error>

namespace semclass {

std::vector<std::string_view> split(std::string_view text, char delim) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    double value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::optional<std::uint64_t> parse_u64(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) {
    if (bound < 2) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll(bound * 2 - 1);
    while (true) {
        std::uint64_t v = next() & mask;
        if (v < bound) return v;
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view key) {
    SplitMix64 mix(base ^ fnv1a64(key));
    return mix.next();
}

}  // namespace semclass
