#pragma once

#include <cstddef>
#include <string>

#include "peuler/udfunction.hpp"

namespace peuler {

// Parse failure with the byte position in the input text.
struct ParseError : DomainError {
    ParseError(const std::string& what, size_t position)
        : DomainError("parse error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    size_t position;
};

// Parses the function DSL (grammar in docs/dsl.md) into a term whose
// scalars live at the given prime and precision.  Examples:
//   "x^3 * twist(4)"        "chi(quad,3) * x"        "shift(x^2,1) - 1/2"
UDFunction parse_udfunction(const std::string& text, i64 p, int prec);

}  // namespace peuler
