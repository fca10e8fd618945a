#pragma once

#include <string>

#include "valkit/surd.hpp"
#include "valkit/words.hpp"

namespace valkit {

// "[a1,a2,...]" with positive integer letters; throws parse_error.
Word parse_word(const std::string& text);

// "(p+q*sqrt(d))/r" with integer p, q, d, r (q may carry the sign of the
// separator, e.g. "(1-2*sqrt(3))/5"); throws parse_error.
QuadSurd parse_surd(const std::string& text);

}  // namespace valkit
