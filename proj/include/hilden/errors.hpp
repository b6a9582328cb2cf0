#pragma once

#include <stdexcept>
#include <string>

namespace hilden {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word or endomorphism was used with symbols from a different alphabet.
struct alphabet_error : error {
    using error::error;
};

// An index argument (1-based throughout the public API) is out of range.
struct index_error : error {
    using error::error;
};

// Bad (g, n) or other configuration-level argument.
struct config_error : error {
    using error::error;
};

// A (forward, backward) pair failed the two-sided inverse check.
struct automorphism_error : error {
    using error::error;
};

// Text input that does not match the expected grammar. `position` is the
// 0-based byte offset of the offending token in the input string.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A generator outside the domain of a partial map (e.g. the motion-group
// image is only defined on interval/exchange/arc-slide generators).
struct unsupported_generator_error : error {
    using error::error;
};

} // namespace hilden
