#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace semclass {

// One induced word sense: a lemma plus an integer sense number, written
// `lemma#sense`. The sense separator is the rightmost `#` followed only by
// digits, so lemmas may themselves contain `#` ("C#" sense 2 is "C##2").
struct SenseId {
    std::string lemma;
    std::uint32_t sense = 0;

    std::string text() const;

    // Strict syntactic parse; nullopt when there is no `#<digits>` suffix,
    // the lemma part is empty, or the sense number overflows.
    static std::optional<SenseId> parse(std::string_view text);

    auto operator<=>(const SenseId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const SenseId& id);

}  // namespace semclass

template <>
struct std::hash<semclass::SenseId> {
    std::size_t operator()(const semclass::SenseId& id) const noexcept {
        std::size_t h = std::hash<std::string>{}(id.lemma);
        return h ^ (std::hash<std::uint32_t>{}(id.sense) + 0x9e3779b9 + (h << 6) + (h >> 2));
    }
};
