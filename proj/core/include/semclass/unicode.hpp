#pragma once

#include <string>
#include <string_view>

namespace semclass {

// Unicode NFC normalization (ICU). Pure-ASCII input is returned as-is.
// Invalid UTF-8 is passed through unchanged rather than rejected: lemma
// matching then degrades to byte equality for those strings.
std::string nfc(std::string_view text);

}  // namespace semclass
