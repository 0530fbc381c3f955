#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semclass {

// Malformed input data. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : std::move(message)),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally invalid data that is not tied to a single input line
// (duplicate keys, dangling references, cycles in a supposed DAG, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseMode { strict, lenient };

struct LineIssue {
    std::size_t line = 0;
    std::string message;
};

// Collects per-line issues in lenient mode; ignored in strict mode
// (strict throws ParseError at the first malformed line).
struct ParseReport {
    std::vector<LineIssue> issues;

    void add(std::size_t line, std::string message) {
        issues.push_back({line, std::move(message)});
    }
};

}  // namespace semclass
