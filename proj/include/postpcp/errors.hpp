#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace postpcp {

// Bad caller input: marker collisions, out-of-range indices, violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text input; carries the 1-based line number when known (0 otherwise).
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace postpcp
