#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgf {

// Bad caller input: orders too small, n out of range, malformed specs.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed coefficient file or inline list. line() is 1-based, 0 if unknown.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An integrality identity that must hold for every integer series did not.
// Reaching this means an arithmetic bug, not bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A checked integrality statement failed at index n.
class PropertyViolation : public std::runtime_error {
public:
    PropertyViolation(const std::string& what, std::size_t n) : std::runtime_error(what), n_(n) {}

    std::size_t n() const noexcept { return n_; }

private:
    std::size_t n_;
};

}  // namespace lgf
