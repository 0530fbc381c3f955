#include "semclass/sense_id.hpp"

#include <charconv>
#include <ostream>

namespace semclass {

std::string SenseId::text() const {
    return lemma + "#" + std::to_string(sense);
}

std::optional<SenseId> SenseId::parse(std::string_view text) {
    std::size_t hash = text.rfind('#');
    if (hash == std::string_view::npos || hash == 0 || hash + 1 == text.size())
        return std::nullopt;
    std::string_view digits = text.substr(hash + 1);
    for (char c : digits)
        if (c < '0' || c > '9') return std::nullopt;
    std::uint32_t sense = 0;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), sense);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
        return std::nullopt;
    return SenseId{std::string(text.substr(0, hash)), sense};
}

std::ostream& operator<<(std::ostream& os, const SenseId& id) {
    return os << id.lemma << '#' << id.sense;
}

}  // namespace semclass
