#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cga {

// Violated operation precondition (chart mismatch, non-unit, membership failure, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text-format error; pos is a 0-based character offset into the input.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

} // namespace cga
