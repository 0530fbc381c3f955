#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semclass {

// Splits on a single-character delimiter; adjacent delimiters yield empty
// fields. An empty input gives one empty field.
std::vector<std::string_view> split(std::string_view text, char delim);

// Shortest decimal form that parses back to the same double (std::to_chars).
std::string format_double(double value);

// Locale-independent parses over the whole string; nullopt on any junk.
std::optional<double> parse_double(std::string_view text);
std::optional<std::uint64_t> parse_u64(std::string_view text);

// FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// splitmix64: tiny splittable PRNG. Deterministic across platforms, which
// std::shuffle and std::hash are not.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t bounded(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates with the project RNG.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(items[i - 1], items[j]);
    }
}

// Stable per-item seed for parallel runs: mixes a base seed with a string key.
std::uint64_t derive_seed(std::uint64_t base, std::string_view key);

}  // namespace semclass
