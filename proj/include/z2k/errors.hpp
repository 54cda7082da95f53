#pragma once

#include <stdexcept>
#include <string>

namespace z2k {

// Caller-supplied data violates a precondition. The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed polynomial text. `pos` is the 1-based character position of the offending input.
struct parse_error : input_error {
    std::size_t pos;

    parse_error(std::size_t pos, const std::string &what)
        : input_error("parse error at position " + std::to_string(pos) + ": " + what), pos(pos) {}
};

// An exact-arithmetic consistency check failed inside the engine. Signals a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace z2k
