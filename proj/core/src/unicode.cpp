#include "semclass/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

namespace semclass {

std::string nfc(std::string_view text) {
    bool ascii = true;
    for (unsigned char c : text) {
        if (c >= 0x80) {
            ascii = false;
            break;
        }
    }
    if (ascii) return std::string(text);

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return std::string(text);

    icu::UnicodeString source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    icu::UnicodeString normalized = norm->normalize(source, status);
    if (U_FAILURE(status)) return std::string(text);

    std::string out;
    normalized.toUTF8String(out);
    return out;
}

}  // namespace semclass
