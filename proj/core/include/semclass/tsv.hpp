#pragma once

#include <cstddef>
#include <istream>
#include <string>

namespace semclass {

// Line reader for the project's TSV formats: tracks 1-based line numbers,
// strips one trailing '\r', skips blank lines.
class TsvReader {
public:
    explicit TsvReader(std::istream& in) : in_(in) {}

    // Reads the next non-blank line into `line`; false at end of stream.
    bool next(std::string& line);

    std::size_t line_number() const { return line_number_; }

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

}  // namespace semclass
