#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laman {

// Bad input: violated precondition, unknown edge id, malformed data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list parse failure; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An operation required a Laman graph and the input is not one.
class NotLamanError : public InputError {
public:
    using InputError::InputError;
};

// Checked 64-bit arithmetic overflowed.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Oracle retries exhausted without agreement between trials.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configurable work budget was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace laman
