#ifndef DIVMOD_ERRORS_HPP
#define DIVMOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divmod {

// Input text could not be parsed; `position` is a 0-based offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          message_(msg),
          position_(position) {}

    // message without the position suffix, for callers that add their own context
    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

// A mathematical precondition was violated (rank deficiency, unit ideal where a
// proper one is required, ...). Maps to CLI exit code 2.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource budget (reduction steps, product counts) was exhausted.
// Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace divmod

#endif
