#pragma once

#include <stdexcept>
#include <string>

namespace valkit {

// Base class for everything this library throws on purpose, so callers can
// distinguish "the computation rejected its input / lost precision" from a
// genuine bug (plain std::logic_error from asserts).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input fails a documented precondition (empty word, letter < 1, r = 0, ...).
struct domain_error : error {
    using error::error;
};

// The value is rational where an irrational was required (d a perfect
// square, q = 0 after normalization).
struct rational_value_error : domain_error {
    using domain_error::domain_error;
};

// A matrix that was expected to be hyperbolic is not (|tr| <= 2 or c = 0).
struct not_hyperbolic_error : domain_error {
    using domain_error::domain_error;
};

// An iteration/state bound was exceeded (continued fraction expansion,
// adaptive quadrature panel budget).
struct overflow_error : error {
    using error::error;
};

// A textual literal ("[1,2]" or "(1+1*sqrt(5))/2") failed to parse.
struct parse_error : error {
    using error::error;
};

// A numerical result failed an internal cross-check (two routes to the same
// quantity disagree, tail bound too large, hypothesis validation failed).
struct consistency_error : error {
    using error::error;
};

}  // namespace valkit
