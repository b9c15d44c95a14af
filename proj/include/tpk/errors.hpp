#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpk {

/// Raised when an operation receives arguments outside its contract
/// (unknown vertices, malformed structures, size guards).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers. Carries the 1-based line that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace tpk
