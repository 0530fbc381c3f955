#include "semclass/tsv.hpp"

namespace semclass {

bool TsvReader::next(std::string& line) {
    while (std::getline(in_, line)) {
        ++line_number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        return true;
    }
    return false;
}

}  // namespace semclass
