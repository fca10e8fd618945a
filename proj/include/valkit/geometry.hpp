#pragma once

#include <gmpxx.h>

#include <string>

#include "valkit/mat2.hpp"
#include "valkit/surd.hpp"
#include "valkit/words.hpp"

namespace valkit {

// Primitive integral binary quadratic form a x^2 + b xy + c y^2 of positive
// discriminant. For the form attached to a hyperbolic matrix the sign is
// pinned by sgn(a) = sgn(repelling - attracting), which orients the geodesic
// so that the base cycle integral of f == 1 comes out +2 log(epsilon).
struct IndefiniteForm {
    mpz_class a, b, c;
    mpz_class disc() const { return b * b - 4 * a * c; }
    std::string str() const {
        return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
    }
};

struct FixedPoints {
    QuadSurd attracting, repelling;
    IndefiniteForm form;
};

// T^{a1} V^{a2} T^{a3} ... V^{al}; requires even length (use even_form first).
Mat2 word_to_matrix(const Word& w);

// Fixed points and invariant form of a hyperbolic matrix (det +1, c != 0).
// The form is c x^2 + (d-a) xy - b y^2 divided by its content, then sign-fixed
// as documented on IndefiniteForm. Its roots are exactly the fixed points and
// its discriminant divides tr^2 - 4.
FixedPoints fixed_points(const Mat2& a);

// Larger root of x^2 - |tr| x + 1: the expanding eigenvalue scale of +-A.
QuadSurd epsilon(const Mat2& a);

// log(epsilon), exact-path evaluation (epsilon may overflow double for long
// words, the log never does).
double epsilon_log(const Mat2& a);
double epsilon_log(const Word& w);  // of even_form(w)

}  // namespace valkit
